// Copyright 2026 The zxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <string>

#include "zxkit/phase.hpp"

namespace zxkit {

using Complex = std::complex<double>;

/**
 * Global scalar carried by a diagram.
 *
 * `exact` records whether every factor folded into the value came from a
 * closed-form expression in exact phases. Rewrites multiply the scalar by
 * their declared factor; nothing ever drops it.
 */
struct Scalar {
  Complex value{1.0, 0.0};
  bool exact = true;

  Scalar() = default;
  Scalar(Complex v, bool is_exact = true) : value(v), exact(is_exact) {}

  static Scalar one() { return {}; }
  static Scalar zero() { return Scalar(Complex(0.0, 0.0)); }
  /// e^{i phase}.
  static Scalar phase(const Phase& p);
  /// sqrt(2)^power.
  static Scalar sqrt2_pow(int power);
  /// 1 + e^{i phase}: the value of a spider with no legs.
  static Scalar legless_spider(const Phase& p);

  bool is_zero() const { return value == Complex(0.0, 0.0); }

  Scalar operator*(const Scalar& o) const {
    return Scalar(value * o.value, exact && o.exact);
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar conj() const { return Scalar(std::conj(value), exact); }

  bool operator==(const Scalar& o) const {
    return value == o.value && exact == o.exact;
  }
};

}  // namespace zxkit
