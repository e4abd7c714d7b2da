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

#include "zxkit/gadget_form.hpp"

#include <bit>
#include <map>
#include <optional>

#include "zxkit/errors.hpp"

namespace zxkit {

namespace {

constexpr std::size_t kMaxWidth = 64;

std::vector<Parity> identity_rows(std::size_t n) {
  std::vector<Parity> rows(n);
  for (std::size_t q = 0; q < n; ++q) rows[q] = Parity{1} << q;
  return rows;
}

bool negligible(const Phase& p) { return p.is_zero() || (!p.is_exact() && p.approx_equal(Phase(), 1e-12)); }

class Builder {
 public:
  explicit Builder(std::size_t n) : n_(n), state_(identity_rows(n)) {}

  void rotate(std::size_t q, const Phase& p) {
    const Parity par = state_[q];
    for (PhaseGadget& g : block_.gadgets)
      if (g.parity == par) {
        g.phase += p;
        return;
      }
    block_.gadgets.push_back({par, p});
  }

  void cnot(std::size_t c, std::size_t t) { state_[t] ^= state_[c]; }

  void interleave(const Gate& g) {
    close();
    if (out_.blocks.empty() || !std::holds_alternative<Interleaver>(out_.blocks.back()))
      out_.blocks.emplace_back(Interleaver{});
    std::get<Interleaver>(out_.blocks.back()).gates.push_back(g);
  }

  GadgetForm finish() {
    close();
    out_.width = n_;
    return std::move(out_);
  }

 private:
  void close() {
    std::erase_if(block_.gadgets, [](const PhaseGadget& g) { return negligible(g.phase); });
    block_.exit = state_;
    if (!block_.gadgets.empty() || state_ != identity_rows(n_)) out_.blocks.emplace_back(block_);
    block_ = PhaseBlock{};
    state_ = identity_rows(n_);
  }

  std::size_t n_;
  std::vector<Parity> state_;
  PhaseBlock block_;
  GadgetForm out_;
};

}  // namespace

GadgetForm to_gadget_form(const Circuit& c) {
  c.validate();
  if (c.width > kMaxWidth) throw TooLarge("gadget form supports at most 64 qubits");
  Builder b(c.width);
  for (const Gate& g : c.gates) {
    if (g.z_rotation()) {
      b.rotate(g.q0, g.rotation());
    } else if (g.kind == GateKind::CNOT) {
      b.cnot(g.q0, g.q1);
    } else if (g.kind == GateKind::RX) {
      b.interleave(Gate::single(GateKind::H, g.q0));
      b.rotate(g.q0, g.phase);
      b.interleave(Gate::single(GateKind::H, g.q0));
    } else {
      b.interleave(g);
    }
  }
  return b.finish();
}

std::vector<Gate> synthesize_linear(const std::vector<Parity>& rows_in) {
  std::vector<Parity> rows = rows_in;
  const std::size_t n = rows.size();
  std::vector<Gate> ops;
  auto row_op = [&](std::size_t ctl, std::size_t tgt) {
    rows[tgt] ^= rows[ctl];
    ops.push_back(Gate::cnot(ctl, tgt));
  };
  for (std::size_t col = 0; col < n; ++col) {
    const Parity bit = Parity{1} << col;
    if (!(rows[col] & bit)) {
      std::optional<std::size_t> pivot;
      for (std::size_t r = col + 1; r < n && !pivot; ++r)
        if (rows[r] & bit) pivot = r;
      if (!pivot) throw std::logic_error("exit map is not invertible");
      row_op(*pivot, col);
    }
    for (std::size_t r = 0; r < n; ++r)
      if (r != col && (rows[r] & bit)) row_op(col, r);
  }
  // the recorded operations reduce the map to the identity; each CNOT is
  // its own inverse, so the reversed list builds the map
  return {ops.rbegin(), ops.rend()};
}

Circuit resynthesize(const GadgetForm& g) {
  Circuit c;
  c.width = g.width;
  for (const GadgetBlock& block : g.blocks) {
    if (const auto* il = std::get_if<Interleaver>(&block)) {
      c.gates.insert(c.gates.end(), il->gates.begin(), il->gates.end());
      continue;
    }
    const PhaseBlock& pb = std::get<PhaseBlock>(block);
    for (const PhaseGadget& gad : pb.gadgets) {
      const std::size_t w = static_cast<std::size_t>(std::countr_zero(gad.parity));
      std::vector<Gate> ladder;
      for (std::size_t q = w + 1; q < g.width; ++q)
        if (gad.parity >> q & 1) ladder.push_back(Gate::cnot(q, w));
      c.gates.insert(c.gates.end(), ladder.begin(), ladder.end());
      c.gates.push_back(Gate::rz(w, gad.phase));
      c.gates.insert(c.gates.end(), ladder.rbegin(), ladder.rend());
    }
    const std::vector<Gate> lin = synthesize_linear(pb.exit);
    c.gates.insert(c.gates.end(), lin.begin(), lin.end());
  }
  return c;
}

Circuit fold_phases(const Circuit& c) {
  c.validate();
  if (c.width > kMaxWidth) throw TooLarge("phase folding supports at most 64 qubits");
  // first pass: total phase per parity per block, and where it first occurs
  std::vector<std::optional<Phase>> replacement(c.gates.size());
  std::vector<Parity> state = identity_rows(c.width);
  std::map<Parity, std::size_t> first;
  auto close = [&] {
    first.clear();
    state = identity_rows(c.width);
  };
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.z_rotation()) {
      auto [it, fresh] = first.emplace(state[g.q0], i);
      if (fresh)
        replacement[i] = g.rotation();
      else {
        *replacement[it->second] += g.rotation();
        replacement[i] = std::nullopt;
      }
    } else if (g.kind == GateKind::CNOT) {
      state[g.q1] ^= state[g.q0];
    } else {
      close();
    }
  }
  Circuit out;
  out.width = c.width;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (!g.z_rotation()) {
      out.gates.push_back(g);
      continue;
    }
    if (!replacement[i] || negligible(*replacement[i])) continue;
    if (*replacement[i] == g.rotation())
      out.gates.push_back(g);
    else
      out.gates.push_back(Gate::rz(g.q0, *replacement[i]));
  }
  return out;
}

}  // namespace zxkit
