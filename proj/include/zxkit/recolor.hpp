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

#include "zxkit/phase.hpp"
#include "zxkit/scalar.hpp"
#include "zxkit/semantics.hpp"

namespace zxkit {

struct RecolorResult {
  Phase alpha;
  Phase beta;
  Phase gamma;
  Scalar scalar;
};

/// Matrix product Z(a) X(b) Z(c) of single-qubit phase gates.
Matrix zxz_product(const Phase& a, const Phase& b, const Phase& c);
/// Matrix product X(a) Z(b) X(c).
Matrix xzx_product(const Phase& a, const Phase& b, const Phase& c);

/**
 * Exchanges the colours of a phase triple:
 *   Z(alpha) X(beta) Z(gamma) = scalar * X(alpha') Z(beta') X(gamma').
 *
 * Found by a numeric Euler decomposition of the 2x2 product, so the output
 * phases and scalar are numeric. beta' is taken in [0, pi]; when beta' is 0
 * or pi the outer phases only matter through their sum or difference, so
 * gamma' is folded into alpha' and set to 0.
 *
 * Since H Z(t) H = X(t), the same map also takes X Z X triples to Z X Z.
 */
RecolorResult recolor_triple(const Phase& alpha, const Phase& beta, const Phase& gamma);

}  // namespace zxkit
