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

#include "zxkit/optimize.hpp"

#include <optional>
#include <tuple>

#include "zxkit/errors.hpp"
#include "zxkit/gadget_form.hpp"

namespace zxkit {

namespace {

bool x_rotation(const Gate& g) { return g.kind == GateKind::X || g.kind == GateKind::RX; }

bool same_pair(const Gate& a, const Gate& b) {
  return (a.q0 == b.q0 && a.q1 == b.q1) || (a.q0 == b.q1 && a.q1 == b.q0);
}

/// Whether a single-qubit gate g can be moved past h.
bool commutes(const Gate& g, const Gate& h) {
  const std::size_t q = g.q0;
  if (g.z_rotation())
    return (h.z_rotation() && h.q0 == q) || h.kind == GateKind::CZ ||
           (h.kind == GateKind::CNOT && h.q0 == q);
  if (x_rotation(g))
    return (x_rotation(h) && h.q0 == q) || (h.kind == GateKind::CNOT && h.q1 == q);
  return false;
}

Metrics metrics_of(std::vector<Gate> gates) {
  Circuit c;
  c.gates = std::move(gates);
  return metrics(c);
}

bool negligible(const Phase& p) {
  return p.is_zero() || (!p.is_exact() && p.approx_equal(Phase(), 1e-12));
}

/// The result of fusing g with a later h (empty vector when they cancel), or
/// nothing if they do not combine.
std::optional<std::vector<Gate>> combine(const Gate& g, const Gate& h) {
  if (g.kind == GateKind::H && h.kind == GateKind::H && g.q0 == h.q0)
    return std::vector<Gate>{};
  if (g.kind == GateKind::CNOT && h.kind == GateKind::CNOT && g.q0 == h.q0 && g.q1 == h.q1)
    return std::vector<Gate>{};
  if ((g.kind == GateKind::CZ || g.kind == GateKind::SWAP) && h.kind == g.kind &&
      same_pair(g, h))
    return std::vector<Gate>{};
  const bool zz = g.z_rotation() && h.z_rotation();
  const bool xx = x_rotation(g) && x_rotation(h);
  if ((!zz && !xx) || g.q0 != h.q0) return std::nullopt;
  const Phase sum = g.rotation() + h.rotation();
  std::vector<Gate> out;
  if (!negligible(sum)) out.push_back(zz ? Gate::rz(g.q0, sum) : Gate::rx(g.q0, sum));
  if (!no_worse(metrics_of(out), metrics_of({g, h}))) return std::nullopt;
  return out;
}

/// Simplifies around gates[i]; returns whether anything changed.
bool simplify_at(std::vector<Gate>& gates, std::size_t i) {
  const Gate& g = gates[i];
  if ((g.z_rotation() || g.kind == GateKind::RX) && negligible(g.rotation())) {
    gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
    return true;
  }
  for (std::size_t k = i + 1; k < gates.size(); ++k) {
    const Gate& h = gates[k];
    const bool touches = h.acts_on(g.q0) || (g.two_qubit() && h.acts_on(g.q1));
    if (!touches) continue;
    if (auto merged = combine(g, h)) {
      gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(k));
      gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
      gates.insert(gates.begin() + static_cast<std::ptrdiff_t>(i), merged->begin(),
                   merged->end());
      return true;
    }
    if (g.two_qubit() || !commutes(g, h)) break;
  }
  return false;
}

bool peephole_pass(std::vector<Gate>& gates) {
  bool changed = false;
  for (std::size_t i = 0; i < gates.size();) {
    if (simplify_at(gates, i)) {
      changed = true;
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
  return changed;
}

}  // namespace

Circuit peephole(const Circuit& c) {
  Circuit out = c;
  while (peephole_pass(out.gates)) {
  }
  return out;
}

OptimizeResult optimize(const Circuit& c, const OptimizeOptions& opts) {
  c.validate();
  OptimizeResult res;
  res.before = metrics(c);

  const Diagram d = to_diagram(c);
  SimplifyResult s = simplify(d, Strategy::CircuitSafe);
  if (c.width <= opts.verify_width) {
    try {
      if (max_abs_diff(eval(d), eval(s.diagram)) > opts.tol)
        throw VerificationFailed("diagram simplification changed the circuit's semantics");
    } catch (const TooLarge&) {
      // too wide to check by contraction; the rules themselves are validated
    }
  }
  res.trace = std::move(s.trace);

  std::vector<std::pair<std::string, Circuit>> candidates;
  if (c.width <= 64) {
    candidates.emplace_back("resynthesis", peephole(resynthesize(to_gadget_form(c))));
    candidates.emplace_back("phase-folding", peephole(fold_phases(c)));
  }
  candidates.emplace_back("peephole", peephole(c));
  candidates.emplace_back("original", c);

  auto key = [](const Metrics& m) {
    return std::make_tuple(m.t_count, m.two_qubit, m.total, m.h_count, m.rotations);
  };
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Metrics m = metrics(candidates[i].second);
    if (!no_worse(m, res.before)) continue;
    if (!best || key(m) < key(metrics(candidates[*best].second))) best = i;
  }
  res.method = candidates[*best].first;
  res.circuit = std::move(candidates[*best].second);
  res.after = metrics(res.circuit);

  if (c.width <= opts.verify_width) {
    const ScalarWitness w = verify_equiv(c, res.circuit, opts.tol);
    if (!w.equal)
      throw VerificationFailed("optimised circuit (" + res.method +
                               ") is not equivalent to the input");
    res.verified = true;
  }
  return res;
}

}  // namespace zxkit
