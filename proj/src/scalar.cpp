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

#include "zxkit/scalar.hpp"

#include <cmath>
#include <numbers>

namespace zxkit {

Scalar Scalar::phase(const Phase& p) {
  if (p.is_exact()) {
    // hit the axis-aligned values exactly
    if (p.num() == 0) return Scalar(Complex(1, 0));
    if (p.den() == 1) return Scalar(Complex(-1, 0));
    if (p.den() == 2) return Scalar(Complex(0, p.num() == 1 ? 1 : -1));
  }
  return Scalar(std::polar(1.0, p.radians()), p.is_exact());
}

Scalar Scalar::sqrt2_pow(int power) {
  double v = std::pow(2.0, power / 2);
  if (power % 2 != 0)
    v *= power > 0 ? std::numbers::sqrt2 : 1.0 / std::numbers::sqrt2;
  return Scalar(Complex(v, 0));
}

Scalar Scalar::legless_spider(const Phase& p) {
  Scalar e = phase(p);
  return Scalar(Complex(1, 0) + e.value, e.exact);
}

}  // namespace zxkit
