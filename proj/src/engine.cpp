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

#include "zxkit/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "zxkit/errors.hpp"

namespace zxkit {

Measure measure(const Diagram& d) {
  Measure m;
  m.vertices = d.num_vertices();
  m.edges = d.total_edge_multiplicity();
  for (const auto& [v, data] : d.vertices()) {
    if (!is_spider_type(data.type) || !data.phase.is_pi()) continue;
    bool at_output = false;
    for (const auto& [w, k] : d.neighbours(v))
      if (d.is_output(w)) at_output = true;
    if (!at_output) ++m.pi_flags;
  }
  return m;
}

std::size_t step_bound(const Measure& m) {
  // vertex and edge counts never grow under the decreasing rules, and the
  // flag count is at most the vertex count
  return (m.vertices + 1) * (m.edges + 1) * (m.vertices + 1);
}

std::vector<Match> find_matches(const RewriteRule& rule, const Diagram& d) {
  std::vector<Match> ms = rule.find(d);
  std::vector<std::pair<std::pair<std::vector<VertexId>, std::vector<VertexId>>, std::size_t>>
      keys;
  keys.reserve(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i)
    keys.push_back({{ms[i].sorted_vertices(), ms[i].vertices}, i});
  std::sort(keys.begin(), keys.end());
  std::vector<Match> out;
  out.reserve(ms.size());
  for (const auto& k : keys) out.push_back(std::move(ms[k.second]));
  return out;
}

Applied apply_rule(const RewriteRule& rule, const Match& m, const Diagram& d) {
  if (m.rule != rule.name) throw StaleMatch("match belongs to rule '" + m.rule + "'");
  const std::vector<Match> current = rule.find(d);
  if (std::find(current.begin(), current.end(), m) == current.end())
    throw StaleMatch("rule '" + rule.name + "' no longer matches " + m.fingerprint());
  Applied out{d, rule.scalar_factor(d, m)};
  const std::vector<VertexId> touched = rule.rewrite(out.diagram, m);
  for (VertexId v : touched) {
    if (!out.diagram.has_vertex(v) || !out.diagram.is_spider(v) || out.diagram.degree(v) != 0)
      continue;
    out.factor *= Scalar::legless_spider(out.diagram.phase(v));
    out.diagram.remove_vertex(v);
  }
  out.diagram.multiply_scalar(out.factor);
  return out;
}

Diagram apply(const RewriteRule& rule, const Match& m, const Diagram& d) {
  return apply_rule(rule, m, d).diagram;
}

Diagram apply(const Match& m, const Diagram& d) { return apply(rule_by_name(m.rule), m, d); }

std::string to_string(Strategy s) { return s == Strategy::Full ? "full" : "circuit-safe"; }

Strategy parse_strategy(const std::string& name) {
  if (name == "full") return Strategy::Full;
  if (name == "circuit-safe") return Strategy::CircuitSafe;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

std::vector<std::string> strategy_rules(Strategy s) {
  if (s == Strategy::CircuitSafe)
    return {"fusion", "identity-removal", "hh-cancel", "hopf", "gadget-cancel"};
  return {"fusion",    "identity-removal", "self-loop-removal", "hh-cancel",     "hopf",
          "copy",      "pi-commute",       "gadget-cancel",     "colour-change", "bialgebra"};
}

SimplifyResult simplify(const Diagram& d, Strategy s) {
  std::vector<const RewriteRule*> rules;
  for (const std::string& name : strategy_rules(s)) rules.push_back(&rule_by_name(name));

  SimplifyResult res{d, {}};
  const std::size_t bound = step_bound(measure(d));
  for (std::size_t step = 0;; ++step) {
    const RewriteRule* rule = nullptr;
    std::vector<Match> ms;
    for (const RewriteRule* r : rules) {
      ms = find_matches(*r, res.diagram);
      if (!ms.empty()) {
        rule = r;
        break;
      }
    }
    if (!rule) break;
    if (step >= bound) throw std::logic_error("simplify exceeded its step bound");
    const Measure before = measure(res.diagram);
    Applied a = apply_rule(*rule, ms.front(), res.diagram);
    const Measure after = measure(a.diagram);
    if (!(after < before))
      throw std::logic_error("rule '" + rule->name + "' did not decrease the measure");
    res.trace.steps.push_back({rule->name, ms.front().fingerprint(), a.factor, before, after});
    res.diagram = std::move(a.diagram);
  }
  return res;
}

Diagram replay(const Diagram& initial, const RewriteTrace& trace) {
  Diagram d = initial;
  for (const TraceStep& step : trace.steps) {
    const RewriteRule& rule = rule_by_name(step.rule);
    const std::vector<Match> ms = rule.find(d);
    auto it = std::find_if(ms.begin(), ms.end(),
                           [&](const Match& m) { return m.fingerprint() == step.fingerprint; });
    if (it == ms.end()) throw StaleMatch("trace step " + step.fingerprint + " does not match");
    d = apply(rule, *it, d);
  }
  return d;
}

nlohmann::json trace_to_json(const RewriteTrace& t) {
  auto measure_json = [](const Measure& m) {
    return nlohmann::json::array({m.vertices, m.edges, m.pi_flags});
  };
  nlohmann::json steps = nlohmann::json::array();
  for (const TraceStep& s : t.steps)
    steps.push_back({{"rule", s.rule},
                     {"match", s.fingerprint},
                     {"scalar", {{"re", s.factor.value.real()}, {"im", s.factor.value.imag()}}},
                     {"measure_before", measure_json(s.before)},
                     {"measure_after", measure_json(s.after)}});
  return steps;
}

}  // namespace zxkit
