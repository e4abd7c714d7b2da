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

#include <cstdint>
#include <string>

namespace zxkit {

/**
 * Spider phase.
 *
 * The exact variant stores the phase as a reduced fraction num/den of pi,
 * normalised into [0, 2). The numeric variant stores radians normalised into
 * [0, 2pi) and is only produced where no closed form is available. Any
 * arithmetic mixing the two yields a numeric phase.
 */
class Phase {
 public:
  /// The zero phase (exact).
  Phase() = default;

  /// Exact phase num/den * pi. Throws std::invalid_argument if den == 0.
  static Phase exact(std::int64_t num, std::int64_t den = 1);
  static Phase numeric(double radians);
  static Phase zero() { return Phase(); }
  static Phase pi() { return exact(1, 1); }

  bool is_exact() const { return exact_; }
  /// Numerator of the reduced pi-fraction. Only meaningful when is_exact().
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double radians() const;

  /// Exact zero. Numeric phases are never considered zero here.
  bool is_zero() const { return exact_ && num_ == 0; }
  bool is_pi() const { return exact_ && num_ == 1 && den_ == 1; }
  /// Exact 0 or pi.
  bool is_pauli() const { return exact_ && den_ == 1; }
  /// Exact multiple of pi/2.
  bool is_clifford() const { return exact_ && (den_ == 1 || den_ == 2); }
  /// Exact multiple of pi/4.
  bool is_clifford_t() const { return exact_ && 4 % den_ == 0; }
  /// Odd multiple of pi/4; numeric phases are tested within `tol`.
  bool is_t_like(double tol = 1e-9) const;

  Phase operator-() const;
  Phase operator+(const Phase& other) const;
  Phase operator-(const Phase& other) const;
  Phase& operator+=(const Phase& other) { return *this = *this + other; }

  /// Structural equality: variants must agree, numeric values compare exactly.
  bool operator==(const Phase& other) const;
  bool operator!=(const Phase& other) const { return !(*this == other); }
  /// Compares the represented angle within `tol` radians (mod 2pi).
  bool approx_equal(const Phase& other, double tol = 1e-9) const;

  /// "num/den" for exact phases, a round-trippable decimal for numeric ones.
  std::string to_string() const;
  /// Parses "num/den", "num" (as num/1) or a decimal number of radians.
  static Phase parse(const std::string& text);

 private:
  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double rad_ = 0.0;
};

}  // namespace zxkit
