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
#include <vector>

#include "zxkit/diagram.hpp"
#include "zxkit/semantics.hpp"

namespace zxkit {

enum class GateKind { H, X, Z, S, Sdg, T, Tdg, RZ, RX, CNOT, CZ, SWAP };

/// Lower-case QASM mnemonic ("h", "sdg", "rz", "cx", ...).
std::string gate_name(GateKind k);

/**
 * A gate on qubit q0 (and q1 for two-qubit gates; q0 is the CNOT control).
 * `phase` is only meaningful for RZ and RX.
 */
struct Gate {
  GateKind kind = GateKind::H;
  std::size_t q0 = 0;
  std::size_t q1 = 0;
  Phase phase;

  static Gate single(GateKind k, std::size_t q) { return {k, q, 0, Phase()}; }
  static Gate rz(std::size_t q, Phase p) { return {GateKind::RZ, q, 0, p}; }
  static Gate rx(std::size_t q, Phase p) { return {GateKind::RX, q, 0, p}; }
  static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::CNOT, c, t, Phase()}; }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, a, b, Phase()}; }
  static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, a, b, Phase()}; }

  bool two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::SWAP;
  }
  /// Z, S, Sdg, T, Tdg and RZ: diagonal single-qubit phase gates.
  bool z_rotation() const;
  /// The rotation angle of a Z rotation, X (pi) or RX.
  Phase rotation() const;
  bool acts_on(std::size_t q) const { return q0 == q || (two_qubit() && q1 == q); }

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  std::size_t width = 0;
  std::vector<Gate> gates;

  /// Throws IllFormed on out-of-range or repeated qubit operands.
  void validate() const;
  bool operator==(const Circuit&) const = default;
};

struct Metrics {
  std::size_t total = 0;
  std::size_t two_qubit = 0;
  /// Rotations by an odd multiple of pi/4 (numeric angles within 1e-9).
  std::size_t t_count = 0;
  std::size_t h_count = 0;
  /// Rotations that are neither Clifford nor T-like.
  std::size_t rotations = 0;

  bool operator==(const Metrics&) const = default;
};

Metrics metrics(const Circuit& c);

/// True when no metric of `a` exceeds the same metric of `b`.
bool no_worse(const Metrics& a, const Metrics& b);

/**
 * ZX translation: Z rotations become Z spiders, X and RX become X spiders,
 * H becomes an H-box, CNOT a Z-X spider pair with scalar sqrt(2), CZ a CNOT
 * conjugated by H-boxes on the target, and SWAP a crossing of wires.
 * The result evaluates to exactly the circuit unitary.
 */
Diagram to_diagram(const Circuit& c);

Matrix circuit_unitary(const Circuit& c, std::size_t max_legs = kDefaultMaxLegs);

/// Unitary equality up to global phase, via eval of both diagrams.
ScalarWitness verify_equiv(const Circuit& a, const Circuit& b, double tol = 1e-8,
                           std::size_t max_legs = kDefaultMaxLegs);

/// Human-readable one-line gate listing, e.g. "cx(0,1) t(1)".
std::string describe(const Circuit& c);

}  // namespace zxkit
