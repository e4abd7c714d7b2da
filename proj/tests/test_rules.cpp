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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "zxkit/engine.hpp"
#include "zxkit/errors.hpp"
#include "zxkit/recolor.hpp"
#include "zxkit/rules.hpp"

using namespace zxkit;

namespace {

std::vector<std::string> rule_names() {
  std::vector<std::string> out;
  for (const RewriteRule& r : build_rules()) out.push_back(r.name);
  return out;
}

// 2x2 gates written out by hand, independent of spider_matrix
Matrix z_gate(double a) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1;
  m(1, 1) = std::polar(1.0, a);
  return m;
}

Matrix x_gate(double a) {
  const Complex e = std::polar(1.0, a);
  Matrix m(2, 2);
  m << (1.0 + e) / 2.0, (1.0 - e) / 2.0, (1.0 - e) / 2.0, (1.0 + e) / 2.0;
  return m;
}

Matrix h_gate() {
  const double r = 1 / std::sqrt(2.0);
  return (Matrix(2, 2) << r, r, r, -r).finished();
}

bool all_clifford(const Diagram& d) {
  for (const auto& [v, data] : d.vertices())
    if (is_spider_type(data.type) && !data.phase.is_clifford()) return false;
  return true;
}

}  // namespace

class RuleTest : public ::testing::TestWithParam<std::string> {};

TEST_P(RuleTest, ThousandRandomInstancesAreSound) {
  const RuleReport r = check_rule_soundness(rule_by_name(GetParam()), 1000, 20261015);
  EXPECT_EQ(r.unmatched, 0u);
  EXPECT_LT(r.max_deviation, 1e-9) << r.worst_instance;
  EXPECT_TRUE(r.sound);
}

TEST_P(RuleTest, AgreesWithBruteForceOracle) {
  const RewriteRule& rule = rule_by_name(GetParam());
  Rng rng(99);
  for (int t = 0; t < 60; ++t) {
    const Diagram d = rule.instantiate(rng, {});
    const std::vector<Match> ms = find_matches(rule, d);
    ASSERT_FALSE(ms.empty());
    const Diagram after = apply(rule, ms.back(), d);
    EXPECT_LT(max_abs_diff(zxtest::brute_force_eval(d), zxtest::brute_force_eval(after)), 1e-10);
  }
}

TEST_P(RuleTest, DecreasingRulesLowerTheMeasure) {
  const RewriteRule& rule = rule_by_name(GetParam());
  if (!rule.decreases_measure) GTEST_SKIP() << "rule is not measure-decreasing";
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const Diagram d = rule.instantiate(rng, {});
    for (const Match& m : find_matches(rule, d)) EXPECT_LT(measure(apply(rule, m, d)), measure(d));
  }
}

TEST_P(RuleTest, CliffordDiagramsStayClifford) {
  const RewriteRule& rule = rule_by_name(GetParam());
  // recolouring goes through a numeric decomposition
  if (rule.name == "recolor") GTEST_SKIP() << "numeric phases by construction";
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const Diagram d = rule.instantiate(rng, {.clifford_phases = true});
    ASSERT_TRUE(all_clifford(d));
    for (const Match& m : find_matches(rule, d)) EXPECT_TRUE(all_clifford(apply(rule, m, d)));
  }
}

TEST_P(RuleTest, MatchesComeInCanonicalOrder) {
  const RewriteRule& rule = rule_by_name(GetParam());
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const std::vector<Match> ms = find_matches(rule, rule.instantiate(rng, {}));
    for (std::size_t i = 1; i < ms.size(); ++i)
      EXPECT_LE(ms[i - 1].sorted_vertices(), ms[i].sorted_vertices());
  }
}

TEST_P(RuleTest, StaleMatchIsRejected) {
  const RewriteRule& rule = rule_by_name(GetParam());
  Rng rng(13);
  const Diagram d = rule.instantiate(rng, {});
  const Match m = find_matches(rule, d).front();
  Diagram changed = d;
  changed.remove_vertex(m.vertices.front());
  EXPECT_THROW(apply(rule, m, changed), StaleMatch);
}

INSTANTIATE_TEST_SUITE_P(Catalog, RuleTest, ::testing::ValuesIn(rule_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Rules, CatalogueIsComplete) {
  const std::vector<std::string> names = rule_names();
  for (const char* n : {"fusion", "identity-removal", "self-loop-removal", "colour-change",
                        "hh-cancel", "euler-h", "copy", "pi-commute", "bialgebra", "hopf",
                        "y-convert", "gadget-cancel", "recolor"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  EXPECT_EQ(catalog().size(), names.size());
  EXPECT_THROW(rule_by_name("nope"), std::out_of_range);
}

TEST(Rules, NegativeControlWrongScalar) {
  for (const std::string& name : {"fusion", "hopf", "copy", "bialgebra"}) {
    RewriteRule bad = rule_by_name(name);
    const auto good = bad.scalar_factor;
    bad.scalar_factor = [good](const Diagram& d, const Match& m) {
      return good(d, m) * Scalar(Complex(1.01, 0));
    };
    const RuleReport r = check_rule_soundness(bad, 50, 1);
    EXPECT_FALSE(r.sound) << name;
    EXPECT_GT(r.max_deviation, 1e-9);
    EXPECT_THROW(validate_rule_soundness(bad, 50, 1), SoundnessViolation);
  }
}

TEST(Rules, NegativeControlWrongRewrite) {
  RewriteRule bad = rule_by_name("fusion");
  // forgets to add the absorbed spider's phase
  bad.rewrite = [](Diagram& d, const Match& m) {
    const VertexId u = m.vertices[0], v = m.vertices[1];
    d.remove_all_edges(u, v);
    const auto nbrs = d.neighbours(v);
    for (const auto& [w, k] : nbrs) d.add_edge(u, w == v ? u : w, k);
    d.remove_vertex(v);
    return std::vector<VertexId>{u};
  };
  EXPECT_FALSE(check_rule_soundness(bad, 100, 2).sound);
}

TEST(Rules, SoundnessIsDeterministicInSeed) {
  const RewriteRule& r = rule_by_name("recolor");
  const RuleReport a = check_rule_soundness(r, 64, 77), b = check_rule_soundness(r, 64, 77);
  EXPECT_EQ(a.max_deviation, b.max_deviation);
  EXPECT_EQ(a.worst_trial, b.worst_trial);
}

TEST(Rules, HopfFactorForEveryMultiplicity) {
  for (unsigned m = 2; m <= 5; ++m) {
    Diagram d;
    const VertexId z = d.add_spider(VertexType::Z, Phase::exact(1, 3));
    const VertexId x = d.add_spider(VertexType::X, Phase::exact(5, 4));
    d.add_edge(z, x, m);
    d.add_edge(d.add_input(), z);
    d.add_edge(x, d.add_output());
    const RewriteRule& hopf = rule_by_name("hopf");
    const Applied a = apply_rule(hopf, find_matches(hopf, d).front(), d);
    EXPECT_NEAR(std::abs(a.factor.value - std::pow(0.5, m / 2)), 0, 1e-15);
    EXPECT_EQ(a.diagram.multiplicity(z, x), m % 2);
    EXPECT_LT(max_abs_diff(zxtest::brute_force_eval(d), zxtest::brute_force_eval(a.diagram)),
              1e-12);
  }
}

TEST(Rules, CopyFactorClosedForm) {
  // X state a (0 or pi) into a Z(alpha) spider of degree k
  for (int a = 0; a <= 1; ++a)
    for (unsigned k = 1; k <= 3; ++k) {
      Diagram d;
      const Phase alpha = Phase::exact(3, 8);
      const VertexId s = d.add_spider(VertexType::X, Phase::exact(a, 1));
      const VertexId v = d.add_spider(VertexType::Z, alpha);
      d.add_edge(s, v);
      for (unsigned i = 1; i < k; ++i) d.add_edge(v, d.add_output());
      const RewriteRule& copy = rule_by_name("copy");
      const Applied r = apply_rule(copy, find_matches(copy, d).front(), d);
      Complex expect = std::pow(2.0, (2.0 - k) / 2.0);
      if (a) expect *= std::polar(1.0, alpha.radians());
      EXPECT_NEAR(std::abs(r.factor.value - expect), 0, 1e-14);
      EXPECT_LT(max_abs_diff(zxtest::brute_force_eval(d), zxtest::brute_force_eval(r.diagram)),
                1e-12);
    }
}

TEST(Rules, GadgetCancelFactor) {
  Rng rng(4);
  const RewriteRule& g = rule_by_name("gadget-cancel");
  for (int t = 0; t < 30; ++t) {
    const Diagram d = g.instantiate(rng, {});
    const Match m = find_matches(g, d).front();
    const int n = static_cast<int>(d.degree(m.vertices[0])) - 1;
    EXPECT_NEAR(std::abs(g.scalar_factor(d, m).value - std::pow(2.0, 1 - n)), 0, 1e-14);
  }
}

TEST(Rules, EulerHScalar) {
  // Z(pi/2) X(pi/2) Z(pi/2) = e^{i pi/4} H
  const double q = std::numbers::pi / 2;
  const Matrix zxz = z_gate(q) * x_gate(q) * z_gate(q);
  EXPECT_LT(max_abs_diff(zxz, std::polar(1.0, std::numbers::pi / 4) * h_gate()), 1e-12);
}

TEST(Recolor, TripleIdentityOnRandomPhases) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
  for (int t = 0; t < 1000; ++t) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const RecolorResult r =
        recolor_triple(Phase::numeric(a), Phase::numeric(b), Phase::numeric(c));
    const Matrix lhs = z_gate(a) * x_gate(b) * z_gate(c);
    const Matrix rhs = r.scalar.value * x_gate(r.alpha.radians()) * z_gate(r.beta.radians()) *
                       x_gate(r.gamma.radians());
    ASSERT_LT(max_abs_diff(lhs, rhs), 1e-9) << a << " " << b << " " << c;
    EXPECT_LE(r.beta.radians(), std::numbers::pi + 1e-12);
  }
}

TEST(Recolor, DegenerateMiddlePhases) {
  for (double b : {0.0, std::numbers::pi}) {
    const RecolorResult r =
        recolor_triple(Phase::numeric(0.7), Phase::numeric(b), Phase::numeric(1.9));
    const Matrix lhs = z_gate(0.7) * x_gate(b) * z_gate(1.9);
    const Matrix rhs = r.scalar.value * x_gate(r.alpha.radians()) * z_gate(r.beta.radians()) *
                       x_gate(r.gamma.radians());
    EXPECT_LT(max_abs_diff(lhs, rhs), 1e-9);
  }
}

TEST(Recolor, QuarterTurnFixedPoint) {
  const Phase q = Phase::exact(1, 2);
  const RecolorResult r = recolor_triple(q, q, q);
  for (const Phase& p : {r.alpha, r.beta, r.gamma})
    EXPECT_TRUE(p.approx_equal(q, 1e-9)) << p.to_string();
  EXPECT_NEAR(std::abs(r.scalar.value - 1.0), 0, 1e-9);
}

TEST(Recolor, RoundTripRestoresTheMatrix) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi), mid(0.1, 3.0);
  for (int t = 0; t < 200; ++t) {
    const Phase a = Phase::numeric(u(rng)), b = Phase::numeric(mid(rng)),
                c = Phase::numeric(u(rng));
    const RecolorResult there = recolor_triple(a, b, c);
    const RecolorResult back = recolor_triple(there.alpha, there.beta, there.gamma);
    // beta in (0, pi) has a unique decomposition, so the phases come back
    EXPECT_TRUE(back.alpha.approx_equal(a, 1e-8));
    EXPECT_TRUE(back.beta.approx_equal(b, 1e-8));
    EXPECT_TRUE(back.gamma.approx_equal(c, 1e-8));
    EXPECT_NEAR(std::abs(there.scalar.value * back.scalar.value - 1.0), 0, 1e-9);
  }
}

TEST(PiCommute, ScalarIsPhaseOfCommutedSpider) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
  const RewriteRule& rule = rule_by_name("pi-commute");
  for (int t = 0; t < 100; ++t) {
    const double alpha = u(rng);
    Diagram d;
    const VertexId i = d.add_input();
    const VertexId p = d.add_spider(VertexType::X, Phase::pi());
    const VertexId z = d.add_spider(VertexType::Z, Phase::numeric(alpha));
    d.add_edge(i, p);
    d.add_edge(p, z);
    d.add_edge(z, d.add_output());
    const Applied a = apply_rule(rule, find_matches(rule, d).front(), d);
    EXPECT_NEAR(std::abs(a.factor.value - std::polar(1.0, alpha)), 0, 1e-12);
    const Matrix oracle = z_gate(alpha) * x_gate(std::numbers::pi);
    EXPECT_LT(max_abs_diff(eval(d), oracle), 1e-10);
    EXPECT_LT(max_abs_diff(eval(a.diagram), oracle), 1e-10);
  }
}
