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
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "zxkit/diagram.hpp"
#include "zxkit/scalar.hpp"

namespace zxkit {

using Rng = std::mt19937_64;

/// Phase condition a rule's constant phases live in.
enum class Fragment { Any, Clifford, CliffordT };

std::string to_string(Fragment f);

struct EdgeBinding {
  VertexId a;
  VertexId b;
  unsigned mult;

  bool operator==(const EdgeBinding&) const = default;
};

/**
 * One occurrence of a rule's left-hand side. `bound` holds the kind and
 * phase of each matched vertex at match time and `edges` the multiplicities
 * the match relied on, so a stale match can be detected before rewriting.
 */
struct Match {
  std::string rule;
  std::vector<VertexId> vertices;
  std::vector<Vertex> bound;
  std::vector<EdgeBinding> edges;

  std::vector<VertexId> sorted_vertices() const;
  /// Stable 16-hex-digit digest of every field.
  std::string fingerprint() const;

  bool operator==(const Match&) const = default;
};

struct InstanceOptions {
  /// Restrict random phases to multiples of pi/2.
  bool clifford_phases = false;
};

/**
 * A directed rewrite rule.
 *
 * `find` lists raw matches, `rewrite` performs the graph surgery and returns
 * the surviving vertices it touched (any that end up as legless spiders are
 * folded into the scalar by the engine), and `scalar_factor` is the exact
 * factor c with eval(lhs) = c * eval(rhs), evaluated on the diagram before
 * the rewrite. `instantiate` draws a random diagram containing at least one
 * match; soundness checking runs the rule on such instances.
 */
struct RewriteRule {
  std::string name;
  std::string summary;
  bool decreases_measure = false;
  Fragment fragment = Fragment::Any;
  std::function<std::vector<Match>(const Diagram&)> find;
  std::function<std::vector<VertexId>(Diagram&, const Match&)> rewrite;
  std::function<Scalar(const Diagram&, const Match&)> scalar_factor;
  std::function<Diagram(Rng&, const InstanceOptions&)> instantiate;
};

/// The rules without the start-up soundness check.
std::vector<RewriteRule> build_rules();

/// Every catalogued rule. The first call checks each rule against the
/// evaluator on a few random instances and throws SoundnessViolation if any
/// scalar factor or rewrite is wrong.
const std::vector<RewriteRule>& catalog();

/// Throws std::out_of_range for unknown names.
const RewriteRule& rule_by_name(std::string_view name);

struct RuleReport {
  std::string rule;
  std::size_t trials = 0;
  double max_deviation = 0.0;
  std::size_t worst_trial = 0;
  /// Trials whose instance had no match (counts as a failure).
  std::size_t unmatched = 0;
  bool sound = true;
  std::string worst_instance;
};

/// Default tolerance for rule soundness.
constexpr double kSoundnessTolerance = 1e-9;

/**
 * Runs `trials` random instances of the rule and compares eval before and
 * after the rewrite, including the scalar. Deterministic in `seed`; trials
 * run in parallel on independent RNG streams.
 */
RuleReport check_rule_soundness(const RewriteRule& rule, std::size_t trials,
                                std::uint64_t seed,
                                double tol = kSoundnessTolerance);

/// As check_rule_soundness but throws SoundnessViolation on failure.
RuleReport validate_rule_soundness(const RewriteRule& rule, std::size_t trials,
                                   std::uint64_t seed,
                                   double tol = kSoundnessTolerance);

std::vector<RuleReport> validate_catalog(std::size_t trials, std::uint64_t seed,
                                         double tol = kSoundnessTolerance);

/// Instance generators, exposed for tests. Each returns a diagram that the
/// named rule matches.
namespace instances {
Diagram fusion(Rng& rng, const InstanceOptions& o);
Diagram identity_removal(Rng& rng, const InstanceOptions& o);
Diagram self_loop_removal(Rng& rng, const InstanceOptions& o);
Diagram colour_change(Rng& rng, const InstanceOptions& o);
Diagram hh_cancel(Rng& rng, const InstanceOptions& o);
Diagram euler_h(Rng& rng, const InstanceOptions& o);
Diagram copy(Rng& rng, const InstanceOptions& o);
Diagram pi_commute(Rng& rng, const InstanceOptions& o);
Diagram bialgebra(Rng& rng, const InstanceOptions& o);
Diagram hopf(Rng& rng, const InstanceOptions& o);
Diagram y_convert(Rng& rng, const InstanceOptions& o);
Diagram gadget_cancel(Rng& rng, const InstanceOptions& o);
Diagram recolor(Rng& rng, const InstanceOptions& o);
}  // namespace instances

}  // namespace zxkit
