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
#include <span>
#include <vector>

#include "zxkit/scalar.hpp"

namespace zxkit {

using WireLabel = std::uint32_t;

/**
 * Dense rank-k qubit tensor. `labels[0]` is the most significant bit of the
 * flat index into `data`, which has 2^k entries.
 */
struct Tensor {
  std::vector<WireLabel> labels;
  std::vector<Complex> data;

  std::size_t rank() const { return labels.size(); }
};

/// Result rank of contracting a with b (labels unique within each tensor).
std::size_t contracted_rank(const Tensor& a, const Tensor& b);

/**
 * Sums over every label shared by `a` and `b`. The result carries a's
 * unshared labels followed by b's, each in their original order. With no
 * shared labels this is the outer product.
 *
 * Parallelised over result entries with OpenMP once the result is large
 * enough to amortise the thread start-up.
 */
Tensor contract_pair(const Tensor& a, const Tensor& b);

/// Serial reference for contract_pair: one label-to-bit map per term.
Tensor contract_pair_reference(const Tensor& a, const Tensor& b);

/// Traces out every label that occurs twice in `t` (self-loops).
Tensor trace_repeated(const Tensor& t);

}  // namespace zxkit
