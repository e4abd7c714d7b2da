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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "zxkit/contraction.hpp"
#include "zxkit/errors.hpp"
#include "zxkit/semantics.hpp"

using namespace zxkit;

namespace {

Tensor random_tensor(std::mt19937_64& rng, std::vector<WireLabel> labels) {
  std::normal_distribution<double> n;
  Tensor t{std::move(labels), {}};
  t.data.resize(std::size_t{1} << t.labels.size());
  for (Complex& c : t.data) c = {n(rng), n(rng)};
  return t;
}

double tensor_diff(const Tensor& a, const Tensor& b) {
  EXPECT_EQ(a.labels, b.labels);
  double m = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

}  // namespace

TEST(Contraction, ParallelKernelMatchesReference) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const int ra = std::uniform_int_distribution<int>(0, 8)(rng);
    const int rb = std::uniform_int_distribution<int>(0, 8)(rng);
    std::vector<WireLabel> pool(16);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<WireLabel> la(pool.begin(), pool.begin() + ra);
    // b reuses some of a's labels
    std::vector<WireLabel> lb;
    for (int i = 0; i < rb; ++i)
      lb.push_back(i < ra && std::bernoulli_distribution(0.5)(rng) ? la[i] : pool[8 + i]);
    std::sort(lb.begin(), lb.end());
    lb.erase(std::unique(lb.begin(), lb.end()), lb.end());
    std::shuffle(lb.begin(), lb.end(), rng);
    const Tensor a = random_tensor(rng, la), b = random_tensor(rng, lb);
    EXPECT_LT(tensor_diff(contract_pair(a, b), contract_pair_reference(a, b)), 1e-12);
  }
}

TEST(Contraction, LargeResultUsesParallelPathCorrectly) {
  std::mt19937_64 rng(2);
  const Tensor a = random_tensor(rng, {0, 1, 2, 3, 4, 5, 6, 7});
  const Tensor b = random_tensor(rng, {7, 6, 8, 9, 10, 11, 12, 13});
  EXPECT_EQ(contracted_rank(a, b), 12u);
  EXPECT_LT(tensor_diff(contract_pair(a, b), contract_pair_reference(a, b)), 1e-10);
}

TEST(Contraction, MatrixProductByHand) {
  // a[i][j] * b[j][k]
  Tensor a{{0, 1}, {1, 2, 3, 4}};
  Tensor b{{1, 2}, {5, 6, 7, 8}};
  const Tensor c = contract_pair(a, b);
  EXPECT_EQ(c.labels, (std::vector<WireLabel>{0, 2}));
  EXPECT_EQ(c.data, (std::vector<Complex>{19, 22, 43, 50}));
}

TEST(Contraction, TraceRepeated) {
  Tensor t{{3, 3}, {1, 2, 3, 4}};
  const Tensor r = trace_repeated(t);
  EXPECT_TRUE(r.labels.empty());
  EXPECT_EQ(r.data, (std::vector<Complex>{5}));
}

TEST(Eval, MatchesBruteForceOracle) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    const Diagram d = zxtest::random_diagram(rng, 5, 4);
    EXPECT_LT(max_abs_diff(eval(d), zxtest::brute_force_eval(d)), 1e-10) << t;
  }
}

TEST(Eval, ContractionOrderDoesNotMatter) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const Diagram d = zxtest::random_diagram(rng);
    const Matrix ref = eval(d);
    const double scale = std::max(1.0, ref.cwiseAbs().maxCoeff());
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      EvalOptions o;
      o.order_seed = seed * 977 + t;
      EXPECT_LT(max_abs_diff(eval(d, o), ref) / scale, 1e-12);
    }
    EvalOptions serial;
    serial.parallel = false;
    EXPECT_LT(max_abs_diff(eval(d, serial), ref) / scale, 1e-12);
  }
}

TEST(Eval, SpiderDefinitions) {
  const double r = 1 / std::sqrt(2.0);
  const Complex e = std::polar(1.0, std::numbers::pi / 4);
  Matrix z = eval(spider(VertexType::Z, Phase::exact(1, 4), 1, 1));
  EXPECT_LT(max_abs_diff(z, (Matrix(2, 2) << 1, 0, 0, e).finished()), 1e-15);
  Matrix h = eval(hadamard());
  EXPECT_LT(max_abs_diff(h, (Matrix(2, 2) << r, r, r, -r).finished()), 1e-15);
  // X spider with one output and phase pi is sqrt(2)|1>
  Matrix x = eval(spider(VertexType::X, Phase::pi(), 0, 1));
  EXPECT_LT(max_abs_diff(x, (Matrix(2, 1) << 0, std::sqrt(2.0)).finished()), 1e-15);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      if (m + n == 0) continue;
      for (VertexType c : {VertexType::Z, VertexType::X}) {
        const Phase p = Phase::exact(3, 8);
        EXPECT_LT(max_abs_diff(eval(spider(c, p, m, n)), spider_matrix(c, p, m, n)), 1e-14);
      }
    }
}

TEST(Eval, BigEndianBoundaryOrder) {
  // swap built from crossing wires: out0 <- in1, out1 <- in0
  Diagram d;
  const VertexId i0 = d.add_input(), i1 = d.add_input();
  const VertexId o0 = d.add_output(), o1 = d.add_output();
  const VertexId x = d.add_spider(VertexType::X, Phase::pi());
  d.add_edge(i0, x);
  d.add_edge(x, o1);
  d.add_edge(i1, o0);
  // |q0 q1> = |10> (column 2) maps to out0 = q1 = 0, out1 = NOT q0 = 0
  const Matrix m = eval(d);
  EXPECT_NEAR(std::abs(m(0, 2) - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(m(1, 0) - 1.0), 0, 1e-15);
}

TEST(Eval, ZeroScalarShortCircuits) {
  Diagram d = spider(VertexType::Z, Phase(), 1, 1);
  d.set_scalar(Scalar::zero());
  EXPECT_EQ(eval(d).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Eval, RejectsTooManyLegs) {
  EXPECT_THROW(eval(spider(VertexType::Z, Phase(), 7, 6)), TooLarge);
  EvalOptions o;
  o.max_legs = 13;
  EXPECT_NO_THROW(eval(spider(VertexType::Z, Phase(), 7, 6), o));
}

TEST(Eval, ScalarDiagramsAndLeglessSpiders) {
  Diagram d;
  d.add_spider(VertexType::X, Phase::exact(1, 2));
  const Matrix m = eval(d);
  ASSERT_EQ(m.rows(), 1);
  EXPECT_NEAR(std::abs(m(0, 0) - Complex(1, 1)), 0, 1e-15);
}

TEST(EqualUpToScalar, FindsWitness) {
  std::mt19937_64 rng(6);
  const Matrix a = eval(zxtest::random_diagram(rng, 4, 4));
  const Complex c(0.3, -2.0);
  const ScalarWitness w = equal_up_to_scalar(Matrix(c * a), a, 1e-10);
  if (a.cwiseAbs().maxCoeff() > 1e-9) {
    ASSERT_TRUE(w.equal);
    ASSERT_TRUE(w.scalar.has_value());
    EXPECT_NEAR(std::abs(*w.scalar - c), 0, 1e-10);
  }
  EXPECT_THROW(equal_up_to_scalar(Matrix::Zero(2, 2), Matrix::Zero(2, 1), 1e-9),
               DimensionMismatch);
  const ScalarWitness z = equal_up_to_scalar(Matrix::Zero(2, 2), Matrix::Zero(2, 2), 1e-9);
  EXPECT_TRUE(z.equal);
  EXPECT_FALSE(z.scalar.has_value());
  EXPECT_FALSE(equal_up_to_scalar(Matrix::Zero(2, 2), zxtest::identity_matrix(1), 1e-9).equal);
}
