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
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "zxkit/diagram.hpp"

namespace zxkit {

/// 2^outputs x 2^inputs, big-endian over the ordered boundary lists.
using Matrix = Eigen::MatrixXcd;

constexpr std::size_t kDefaultMaxLegs = 12;

struct EvalOptions {
  /// Upper bound on inputs + outputs.
  std::size_t max_legs = kDefaultMaxLegs;
  /// Upper bound on the rank of any intermediate tensor (2^rank entries).
  std::size_t max_width = 20;
  /// When set, contraction pairs are picked at random from this seed
  /// instead of greedily. Used to check order independence.
  std::optional<std::uint64_t> order_seed;
  /// Use the OpenMP contraction kernel; false selects the serial reference.
  bool parallel = true;
};

/**
 * Exact tensor-network evaluation: scalar times the contraction of every
 * vertex tensor over the internal edges.
 *
 * Throws TooLarge when the leg budget or the width cap would be exceeded and
 * IllFormed when the diagram breaks an invariant. A zero scalar gives the
 * zero matrix without contracting anything.
 */
Matrix eval(const Diagram& d, const EvalOptions& opts = {});

/// Reference matrix of a single spider, built from the corner matrix and,
/// for X, explicit Hadamard conjugation of every leg.
Matrix spider_matrix(VertexType type, const Phase& phase, std::size_t m, std::size_t n);
Matrix hadamard_matrix();
Matrix kron(const Matrix& a, const Matrix& b);

double max_abs_diff(const Matrix& a, const Matrix& b);
bool is_unitary(const Matrix& m, double tol);

struct ScalarWitness {
  bool equal = false;
  /// The c with a = c * b; empty when both matrices are (near) zero.
  std::optional<Complex> scalar;
};

/**
 * Decides a = c * b for some nonzero c, entrywise within `tol`. c is taken as
 * the ratio at the largest-magnitude entry of b (first in row-major order on
 * ties). Throws DimensionMismatch on shape mismatch.
 */
ScalarWitness equal_up_to_scalar(const Matrix& a, const Matrix& b, double tol);

}  // namespace zxkit
