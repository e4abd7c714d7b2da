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

#include <cstddef>
#include <string>

#include "zxkit/circuit.hpp"
#include "zxkit/engine.hpp"

namespace zxkit {

/**
 * Local cleanup to a fixed point: cancels adjacent self-inverse pairs (H, X,
 * Z, CNOT, CZ, SWAP), merges Z rotations on the same wire across gates that
 * commute with them, likewise X rotations, and drops zero rotations.
 * Never increases any metric.
 */
Circuit peephole(const Circuit& c);

struct OptimizeOptions {
  /// Check the result against the input when width <= verify_width.
  std::size_t verify_width = 6;
  double tol = 1e-8;
};

struct OptimizeResult {
  Circuit circuit;
  Metrics before;
  Metrics after;
  /// Simplification of the circuit's diagram under the circuit-safe strategy.
  RewriteTrace trace;
  /// Which candidate was kept: "resynthesis", "phase-folding", "peephole" or
  /// "original".
  std::string method;
  bool verified = false;
};

/**
 * Simplifies the circuit's diagram with the circuit-safe rules, then builds
 * candidate circuits (gadget resynthesis, phase folding, plain peephole) and
 * keeps the best one that is no worse than the input on every metric.
 * Throws VerificationFailed if the result does not match the input.
 */
OptimizeResult optimize(const Circuit& c, const OptimizeOptions& opts = {});

}  // namespace zxkit
