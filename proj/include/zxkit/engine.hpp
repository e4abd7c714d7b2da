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

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "zxkit/diagram.hpp"
#include "zxkit/rules.hpp"

namespace zxkit {

/**
 * Termination measure: (vertex count, total edge multiplicity, number of
 * exact-pi spiders with no output boundary neighbour), ordered
 * lexicographically. Every rule marked decreases_measure strictly lowers it.
 */
struct Measure {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t pi_flags = 0;

  auto operator<=>(const Measure&) const = default;
};

Measure measure(const Diagram& d);

/// Upper bound on the length of a strictly decreasing chain of measures
/// starting at m.
std::size_t step_bound(const Measure& m);

/// All matches of a rule, in canonical order: sorted by the sorted tuple of
/// matched vertex ids, ties broken by the pattern-ordered tuple.
std::vector<Match> find_matches(const RewriteRule& rule, const Diagram& d);

struct Applied {
  Diagram diagram;
  /// Everything multiplied into the scalar, including folded legless spiders.
  Scalar factor;
};

/**
 * Applies a match to a copy of `d`. Throws StaleMatch if `d` no longer
 * contains exactly the matched subgraph.
 */
Applied apply_rule(const RewriteRule& rule, const Match& m, const Diagram& d);
Diagram apply(const RewriteRule& rule, const Match& m, const Diagram& d);
/// Looks the rule up in the catalogue by m.rule.
Diagram apply(const Match& m, const Diagram& d);

struct TraceStep {
  std::string rule;
  std::string fingerprint;
  Scalar factor;
  Measure before;
  Measure after;
};

struct RewriteTrace {
  std::vector<TraceStep> steps;
};

enum class Strategy { Full, CircuitSafe };

std::string to_string(Strategy s);
/// Throws std::invalid_argument for unknown names.
Strategy parse_strategy(const std::string& name);
/// Rule names in priority order.
std::vector<std::string> strategy_rules(Strategy s);

struct SimplifyResult {
  Diagram diagram;
  RewriteTrace trace;
};

/**
 * Repeatedly applies the first rule of the strategy that has a match, at its
 * first canonical match, until nothing matches. Deterministic.
 */
SimplifyResult simplify(const Diagram& d, Strategy s);

/// Re-applies every step of a trace, locating each match by fingerprint.
/// Throws StaleMatch if a step cannot be found.
Diagram replay(const Diagram& initial, const RewriteTrace& trace);

nlohmann::json trace_to_json(const RewriteTrace& t);

}  // namespace zxkit
