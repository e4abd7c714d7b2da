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

#include <gtest/gtest.h>

#include "zxkit/phase.hpp"
#include "zxkit/scalar.hpp"

using zxkit::Phase;
using zxkit::Scalar;

TEST(Phase, ExactNormalisesIntoHalfOpenRange) {
  EXPECT_EQ(Phase::exact(-1, 4), Phase::exact(7, 4));
  EXPECT_EQ(Phase::exact(9, 4), Phase::exact(1, 4));
  EXPECT_EQ(Phase::exact(2, 4), Phase::exact(1, 2));
  EXPECT_EQ(Phase::exact(4, 2), Phase::zero());
  EXPECT_EQ(Phase::exact(3, -4), Phase::exact(5, 4));
  EXPECT_THROW(Phase::exact(1, 0), std::invalid_argument);
}

TEST(Phase, NumericNormalises) {
  const Phase p = Phase::numeric(-std::numbers::pi / 2);
  EXPECT_FALSE(p.is_exact());
  EXPECT_NEAR(p.radians(), 1.5 * std::numbers::pi, 1e-15);
  EXPECT_NEAR(Phase::numeric(7 * std::numbers::pi).radians(), std::numbers::pi, 1e-12);
}

TEST(Phase, ArithmeticStaysExact) {
  const Phase a = Phase::exact(1, 4), b = Phase::exact(3, 4);
  EXPECT_EQ(a + b, Phase::pi());
  EXPECT_EQ(a - b, Phase::exact(3, 2));
  EXPECT_EQ(-a, Phase::exact(7, 4));
  EXPECT_TRUE((a + -a).is_zero());
  EXPECT_TRUE((a + b).is_exact());
}

TEST(Phase, MixedArithmeticIsNumeric) {
  const Phase s = Phase::exact(1, 2) + Phase::numeric(0.25);
  EXPECT_FALSE(s.is_exact());
  EXPECT_NEAR(s.radians(), std::numbers::pi / 2 + 0.25, 1e-15);
  EXPECT_FALSE(Phase::numeric(0.0).is_zero());
}

TEST(Phase, Predicates) {
  EXPECT_TRUE(Phase::pi().is_pauli());
  EXPECT_TRUE(Phase::exact(3, 2).is_clifford());
  EXPECT_FALSE(Phase::exact(1, 4).is_clifford());
  EXPECT_TRUE(Phase::exact(3, 4).is_clifford_t());
  EXPECT_TRUE(Phase::exact(7, 4).is_t_like());
  EXPECT_FALSE(Phase::exact(1, 2).is_t_like());
  EXPECT_TRUE(Phase::numeric(std::numbers::pi / 4 + 1e-12).is_t_like(1e-9));
  EXPECT_FALSE(Phase::numeric(std::numbers::pi / 4 + 1e-6).is_t_like(1e-9));
  EXPECT_FALSE(Phase::exact(1, 8).is_clifford_t());
}

TEST(Phase, ApproxEqualWrapsAround) {
  EXPECT_TRUE(Phase::numeric(2 * std::numbers::pi - 1e-12).approx_equal(Phase::zero(), 1e-9));
  EXPECT_TRUE(Phase::exact(1, 3).approx_equal(Phase::numeric(std::numbers::pi / 3)));
  EXPECT_FALSE(Phase::exact(1, 3).approx_equal(Phase::exact(1, 2)));
}

TEST(Phase, TextRoundTrip) {
  for (const Phase& p : {Phase::zero(), Phase::pi(), Phase::exact(7, 4), Phase::exact(5, 12),
                         Phase::numeric(1.2345678901234567), Phase::numeric(0.1)}) {
    EXPECT_EQ(Phase::parse(p.to_string()), p) << p.to_string();
  }
  EXPECT_EQ(Phase::parse("3"), Phase::pi());
  EXPECT_EQ(Phase::parse("-1/2"), Phase::exact(3, 2));
  EXPECT_THROW(Phase::parse("1/x"), std::invalid_argument);
  EXPECT_THROW(Phase::parse("abc"), std::invalid_argument);
}

TEST(Scalar, ClosedForms) {
  EXPECT_EQ(Scalar::phase(Phase::pi()).value, zxkit::Complex(-1, 0));
  EXPECT_EQ(Scalar::phase(Phase::exact(1, 2)).value, zxkit::Complex(0, 1));
  EXPECT_NEAR(Scalar::sqrt2_pow(3).value.real(), 2 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(Scalar::sqrt2_pow(-2).value.real(), 0.5, 1e-15);
  EXPECT_TRUE(Scalar::legless_spider(Phase::pi()).is_zero());
  EXPECT_NEAR(std::abs(Scalar::legless_spider(Phase::zero()).value - 2.0), 0.0, 1e-15);
  EXPECT_FALSE(Scalar::phase(Phase::numeric(0.3)).exact);
  EXPECT_TRUE((Scalar::sqrt2_pow(1) * Scalar::phase(Phase::exact(1, 4))).exact);
}
