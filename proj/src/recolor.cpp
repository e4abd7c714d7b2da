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

#include "zxkit/recolor.hpp"

#include <cmath>
#include <numbers>

namespace zxkit {

namespace {

// sin or cos of beta'/2 below this is treated as an exact zero
constexpr double kDegenerate = 1e-12;

Matrix z_gate(const Phase& p) { return spider_matrix(VertexType::Z, p, 1, 1); }
Matrix x_gate(const Phase& p) { return spider_matrix(VertexType::X, p, 1, 1); }

}  // namespace

Matrix zxz_product(const Phase& a, const Phase& b, const Phase& c) {
  return z_gate(a) * x_gate(b) * z_gate(c);
}

Matrix xzx_product(const Phase& a, const Phase& b, const Phase& c) {
  return x_gate(a) * z_gate(b) * x_gate(c);
}

RecolorResult recolor_triple(const Phase& alpha, const Phase& beta, const Phase& gamma) {
  // X(a)Z(b)X(c) = H Z(a)X(b)Z(c) H, so decompose N = H M H as Z X Z:
  //   Z(a)X(b)Z(c) = e^{ib/2} [[cos(b/2),           -i sin(b/2) e^{ic}],
  //                            [-i sin(b/2) e^{ia},  cos(b/2) e^{i(a+c)}]]
  const Matrix h = hadamard_matrix();
  const Matrix n = h * zxz_product(alpha, beta, gamma) * h;

  const double c_mag = std::abs(n(0, 0)) + std::abs(n(1, 1));
  const double s_mag = std::abs(n(0, 1)) + std::abs(n(1, 0));
  const double half = std::atan2(s_mag, c_mag);  // in [0, pi/2]
  const double b = 2.0 * half;
  const double cos_h = std::cos(half), sin_h = std::sin(half);
  const Complex e_half = std::polar(1.0, b / 2);
  const Complex minus_i(0, -1);

  double a = 0.0, c = 0.0;
  Complex s;
  if (sin_h < kDegenerate) {
    a = std::arg(n(1, 1)) - std::arg(n(0, 0));
    s = n(0, 0) / (e_half * cos_h);
  } else if (cos_h < kDegenerate) {
    a = std::arg(n(1, 0)) - std::arg(n(0, 1));
    s = n(0, 1) / (e_half * minus_i * sin_h);
  } else {
    a = std::arg(n(1, 0)) - std::arg(n(0, 0)) + std::numbers::pi / 2;
    c = std::arg(n(0, 1)) - std::arg(n(0, 0)) + std::numbers::pi / 2;
    s = n(0, 0) / (e_half * cos_h);
  }
  return {Phase::numeric(a), Phase::numeric(b), Phase::numeric(c), Scalar(s, false)};
}

}  // namespace zxkit
