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
#include <variant>
#include <vector>

#include "zxkit/circuit.hpp"

namespace zxkit {

/// A set of qubits, as a bit mask over at most 64 wires.
using Parity = std::uint64_t;

struct PhaseGadget {
  Parity parity = 0;
  Phase phase;

  bool operator==(const PhaseGadget&) const = default;
};

/**
 * A CNOT+phase region: diagonal gadgets on parities of the block's entry
 * wire values, followed by a linear reversible map. exit[q] is the parity of
 * entry values carried by wire q when the block ends.
 */
struct PhaseBlock {
  std::vector<PhaseGadget> gadgets;
  std::vector<Parity> exit;

  bool operator==(const PhaseBlock&) const = default;
};

/// Gates that break phase tracking (H, X, CZ, SWAP), kept verbatim.
struct Interleaver {
  std::vector<Gate> gates;

  bool operator==(const Interleaver&) const = default;
};

using GadgetBlock = std::variant<PhaseBlock, Interleaver>;

struct GadgetForm {
  std::size_t width = 0;
  std::vector<GadgetBlock> blocks;
};

/**
 * Splits a circuit into phase blocks and interleavers. Rotations on the
 * same parity within a block are merged; zero-phase gadgets are dropped.
 * RX(t) is read as H RZ(t) H. Width is limited to 64.
 */
GadgetForm to_gadget_form(const Circuit& c);

/// Rebuilds a circuit: each gadget as a CNOT ladder around one RZ, each exit
/// map by Gaussian elimination over GF(2).
Circuit resynthesize(const GadgetForm& g);

/// CNOT sequence implementing the map q -> rows[q] from the identity.
std::vector<Gate> synthesize_linear(const std::vector<Parity>& rows);

/**
 * Keeps the original gate sequence but merges every Z rotation into the first
 * rotation on the same parity in its block; later ones are dropped.
 */
Circuit fold_phases(const Circuit& c);

}  // namespace zxkit
