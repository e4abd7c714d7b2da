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

#include <cmath>
#include <limits>
#include <sstream>

#include "zxkit/diagram_json.hpp"
#include "zxkit/engine.hpp"
#include "zxkit/errors.hpp"
#include "zxkit/rules.hpp"
#include "zxkit/semantics.hpp"

namespace zxkit {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Trial {
  double deviation = 0.0;
  bool matched = true;
  std::string instance;
};

Trial run_trial(const RewriteRule& rule, std::uint64_t stream) {
  Rng rng(stream);
  Trial t;
  const Diagram d = rule.instantiate(rng, {});
  t.instance = dump_diagram(d, -1);
  const std::vector<Match> ms = find_matches(rule, d);
  if (ms.empty()) {
    t.matched = false;
    t.deviation = std::numeric_limits<double>::infinity();
    return t;
  }
  const Match& m = ms[rng() % ms.size()];
  try {
    const Diagram after = apply(rule, m, d);
    after.validate();
    if (after.inputs().size() != d.inputs().size() ||
        after.outputs().size() != d.outputs().size()) {
      t.deviation = std::numeric_limits<double>::infinity();
      return t;
    }
    EvalOptions serial;
    serial.parallel = false;
    t.deviation = max_abs_diff(eval(d, serial), eval(after, serial));
    if (std::isnan(t.deviation)) t.deviation = std::numeric_limits<double>::infinity();
  } catch (const ZXError&) {
    t.deviation = std::numeric_limits<double>::infinity();
  }
  return t;
}

}  // namespace

RuleReport check_rule_soundness(const RewriteRule& rule, std::size_t trials,
                                std::uint64_t seed, double tol) {
  std::vector<Trial> results(trials);
  const std::uint64_t base = splitmix(seed ^ name_hash(rule.name));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i)
    results[i] = run_trial(rule, splitmix(base + static_cast<std::uint64_t>(i)));

  RuleReport r;
  r.rule = rule.name;
  r.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    if (!results[i].matched) ++r.unmatched;
    if (i == 0 || results[i].deviation > r.max_deviation) {
      r.max_deviation = results[i].deviation;
      r.worst_trial = i;
      r.worst_instance = results[i].instance;
    }
  }
  r.sound = r.unmatched == 0 && r.max_deviation < tol;
  return r;
}

RuleReport validate_rule_soundness(const RewriteRule& rule, std::size_t trials,
                                   std::uint64_t seed, double tol) {
  RuleReport r = check_rule_soundness(rule, trials, seed, tol);
  if (!r.sound) throw SoundnessViolation(r.rule, r.worst_instance, r.max_deviation);
  return r;
}

std::vector<RuleReport> validate_catalog(std::size_t trials, std::uint64_t seed, double tol) {
  std::vector<RuleReport> out;
  for (const RewriteRule& rule : catalog())
    out.push_back(check_rule_soundness(rule, trials, seed, tol));
  return out;
}

}  // namespace zxkit
