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

#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "zxkit/canonical.hpp"
#include "zxkit/diagram.hpp"
#include "zxkit/diagram_json.hpp"
#include "zxkit/errors.hpp"

using namespace zxkit;

TEST(Diagram, EdgesCarryMultiplicity) {
  Diagram d;
  const VertexId a = d.add_spider(VertexType::Z), b = d.add_spider(VertexType::X);
  d.add_edge(a, b);
  d.add_edge(b, a, 2);
  d.add_edge(a, a);
  EXPECT_EQ(d.multiplicity(a, b), 3u);
  EXPECT_EQ(d.self_loops(a), 1u);
  EXPECT_EQ(d.degree(a), 5u);
  EXPECT_EQ(d.total_edge_multiplicity(), 4u);
  d.remove_edge(a, b, 2);
  EXPECT_EQ(d.multiplicity(a, b), 1u);
  EXPECT_EQ(d.remove_all_edges(a, a), 1u);
  EXPECT_EQ(d.degree(a), 1u);
}

TEST(Diagram, IdsAreNeverReused) {
  Diagram d;
  const VertexId a = d.add_spider(VertexType::Z);
  d.remove_vertex(a);
  EXPECT_NE(d.add_spider(VertexType::Z), a);
}

TEST(Diagram, ValidateRejectsBadBoundaries) {
  Diagram d;
  const VertexId i = d.add_input();
  EXPECT_THROW(d.validate(), IllFormed);  // boundary with no edge
  const VertexId z = d.add_spider(VertexType::Z);
  d.add_edge(i, z);
  EXPECT_NO_THROW(d.validate());
  d.add_edge(i, z);
  EXPECT_THROW(d.validate(), IllFormed);  // boundary of degree 2
}

TEST(Diagram, ValidateRejectsPhasedHBox) {
  Diagram d;
  const VertexId h = d.add_vertex(VertexType::H);
  d.add_edge(d.add_input(), h);
  d.add_edge(h, d.add_output());
  EXPECT_NO_THROW(d.validate());
  d.set_phase(h, Phase::pi());
  EXPECT_THROW(d.validate(), IllFormed);
}

TEST(Diagram, SpliceOutMakesWire) {
  Diagram d;
  const VertexId i = d.add_input(), o = d.add_output();
  const VertexId z = d.add_spider(VertexType::Z);
  d.add_edge(i, z);
  d.add_edge(z, o);
  d.splice_out(z);
  EXPECT_EQ(d.multiplicity(i, o), 1u);
  EXPECT_EQ(d.num_vertices(), 2u);
}

TEST(Diagram, SpliceOutClosedLoopIsTwo) {
  Diagram d;
  const VertexId z = d.add_spider(VertexType::Z);
  d.add_edge(z, z);
  d.splice_out(z);
  EXPECT_EQ(d.num_vertices(), 0u);
  EXPECT_NEAR(std::abs(d.scalar().value - 2.0), 0.0, 1e-15);
}

TEST(Compose, SequentialMatchesMatrixProduct) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    Diagram a = spider(VertexType::Z, zxtest::random_phase(rng), 2, 1);
    Diagram b = spider(VertexType::X, zxtest::random_phase(rng), 1, 2);
    const Matrix ab = eval(compose_seq(a, b));
    EXPECT_LT(max_abs_diff(ab, eval(b) * eval(a)), 1e-12);
    const Matrix ba = eval(compose_seq(b, a));
    EXPECT_LT(max_abs_diff(ba, eval(a) * eval(b)), 1e-12);
  }
  EXPECT_THROW(compose_seq(spider(VertexType::Z, Phase(), 1, 2), identity(1)), ArityMismatch);
}

TEST(Compose, ParallelMatchesKron) {
  const Diagram a = spider(VertexType::Z, Phase::exact(1, 4), 1, 1);
  const Diagram b = compose_seq(hadamard(), spider(VertexType::X, Phase::exact(1, 3), 1, 2));
  EXPECT_LT(max_abs_diff(eval(compose_par(a, b)), kron(eval(a), eval(b))), 1e-12);
}

TEST(Compose, SnakeIsIdentity) {
  // cup on wires 1-2, then cap on wires 0-1
  Diagram cup = spider(VertexType::Z, Phase(), 0, 2);
  Diagram cap = spider(VertexType::Z, Phase(), 2, 0);
  const Diagram snake = compose_seq(compose_par(identity(1), cup), compose_par(cap, identity(1)));
  EXPECT_LT(max_abs_diff(eval(snake), zxtest::identity_matrix(1)), 1e-12);
}

TEST(Compose, AdjointIsConjugateTranspose) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const Diagram d = zxtest::random_diagram(rng, 5, 4);
    EXPECT_LT(max_abs_diff(eval(adjoint(d)), eval(d).adjoint()), 1e-9);
  }
}

TEST(Json, RoundTripPreservesEverything) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Diagram d = zxtest::random_diagram(rng);
    d.set_scalar(Scalar(Complex(0.5, -1.25)));
    const Diagram back = parse_diagram(dump_diagram(d));
    EXPECT_TRUE(back == d);
  }
}

TEST(Json, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_diagram("{"), FormatError);
  EXPECT_THROW(parse_diagram(R"({"version":2,"vertices":[],"edges":[],"inputs":[],"outputs":[]})"),
               FormatError);
  EXPECT_THROW(parse_diagram(R"({"version":1,"vertices":[{"id":0,"kind":"Q"}],"edges":[],
                              "inputs":[],"outputs":[]})"),
               FormatError);
  // edge to a missing vertex
  EXPECT_THROW(parse_diagram(R"({"version":1,"vertices":[{"id":0,"kind":"Z","phase":"0/1"}],
                              "edges":[{"src":0,"dst":5}],"inputs":[],"outputs":[]})"),
               ZXError);
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Diagram d = zxtest::random_diagram(rng);
    std::vector<VertexId> ids;
    for (const auto& [v, data] : d.vertices()) ids.push_back(v);
    std::vector<VertexId> perm = ids;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<VertexId, VertexId> map;
    for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = perm[i] + 100;
    const Diagram r = relabel(d, map);
    EXPECT_EQ(canonical_hash(d), canonical_hash(r));
    EXPECT_LT(max_abs_diff(eval(d), eval(r)), 1e-12);
  }
}

TEST(Canonical, DistinguishesPhasesAndBoundaryOrder) {
  const Diagram a = spider(VertexType::Z, Phase::exact(1, 4), 1, 1);
  const Diagram b = spider(VertexType::Z, Phase::exact(3, 4), 1, 1);
  EXPECT_NE(canonical_hash(a), canonical_hash(b));
  Diagram c = spider(VertexType::Z, Phase::exact(1, 4), 1, 2);
  Diagram swapped = c;
  swapped.set_outputs({c.outputs()[1], c.outputs()[0]});
  // a Z spider is symmetric, so swapping its outputs is an isomorphism
  EXPECT_EQ(canonical_hash(c), canonical_hash(swapped));
  EXPECT_NE(canonical_hash(spider(VertexType::Z, Phase(), 1, 1)),
            canonical_hash(spider(VertexType::X, Phase(), 1, 1)));
}
