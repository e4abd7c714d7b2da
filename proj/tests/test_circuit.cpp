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

#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "zxkit/circuit.hpp"
#include "zxkit/errors.hpp"
#include "zxkit/gadget_form.hpp"
#include "zxkit/optimize.hpp"
#include "zxkit/qasm.hpp"

using namespace zxkit;

namespace {

Circuit make(std::size_t width, std::vector<Gate> gates) {
  Circuit c;
  c.width = width;
  c.gates = std::move(gates);
  return c;
}

Gate g1(GateKind k, std::size_t q) { return Gate::single(k, q); }

}  // namespace

TEST(Circuit, DiagramMatchesSimulation) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const Circuit c = zxtest::random_circuit(rng, 1 + t % 4, 15);
    EXPECT_LT(max_abs_diff(eval(to_diagram(c)), zxtest::simulate(c)), 1e-10) << describe(c);
  }
}

TEST(Circuit, CnotConstruction) {
  // the bare spider pair is CNOT / sqrt(2)
  Diagram d;
  const VertexId i0 = d.add_input(), i1 = d.add_input();
  const VertexId z = d.add_spider(VertexType::Z), x = d.add_spider(VertexType::X);
  d.add_edge(i0, z);
  d.add_edge(i1, x);
  d.add_edge(z, x);
  d.add_edge(z, d.add_output());
  d.add_edge(x, d.add_output());
  Matrix cnot = Matrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
  EXPECT_LT(max_abs_diff(eval(d), cnot / std::sqrt(2.0)), 1e-12);
  EXPECT_LT(max_abs_diff(circuit_unitary(make(2, {Gate::cnot(0, 1)})), cnot), 1e-12);
}

TEST(Circuit, Validate) {
  EXPECT_THROW(make(2, {Gate::cnot(0, 2)}).validate(), IllFormed);
  EXPECT_THROW(make(2, {Gate::cz(1, 1)}).validate(), IllFormed);
  EXPECT_NO_THROW(make(2, {Gate::swap(0, 1)}).validate());
}

TEST(Circuit, Metrics) {
  const Circuit c = make(2, {g1(GateKind::T, 0), g1(GateKind::Tdg, 1), g1(GateKind::S, 0),
                             Gate::rz(0, Phase::exact(3, 4)), Gate::rz(1, Phase::exact(1, 8)),
                             Gate::rz(1, Phase::numeric(std::numbers::pi / 4)),
                             Gate::rx(0, Phase::exact(5, 4)), g1(GateKind::H, 0),
                             Gate::cnot(0, 1), Gate::cz(0, 1), Gate::swap(0, 1)});
  const Metrics m = metrics(c);
  EXPECT_EQ(m.total, 11u);
  EXPECT_EQ(m.two_qubit, 3u);
  EXPECT_EQ(m.t_count, 5u);
  EXPECT_EQ(m.h_count, 1u);
  EXPECT_EQ(m.rotations, 1u);
}

TEST(Circuit, SwapFromThreeCnots) {
  const Circuit a = make(2, {Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::cnot(0, 1)});
  const Circuit b = make(2, {Gate::swap(0, 1)});
  const ScalarWitness w = verify_equiv(a, b, 1e-10);
  EXPECT_TRUE(w.equal);
  EXPECT_FALSE(verify_equiv(a, make(2, {}), 1e-10).equal);
}

TEST(Qasm, ParsesTheSubset) {
  const Circuit c = parse_qasm(R"(OPENQASM 2.0;
include "qelib1.inc";
// comment
qreg q[3];
h q[0]; x q[1]; z q[2];
s q[0]; sdg q[1]; t q[2]; tdg q[0];
rz(pi/4) q[0];
rz(-3*pi/4) q[1];
rx(0.5) q[2];
rz(2*pi) q[0];
rz(pi) q[0];
cx q[0],q[1];
cz q[1], q[2];
swap q[2],q[0];
)");
  EXPECT_EQ(c.width, 3u);
  ASSERT_EQ(c.gates.size(), 15u);
  EXPECT_EQ(c.gates[7], Gate::rz(0, Phase::exact(1, 4)));
  EXPECT_EQ(c.gates[8], Gate::rz(1, Phase::exact(5, 4)));
  EXPECT_EQ(c.gates[9], Gate::rx(2, Phase::numeric(0.5)));
  EXPECT_EQ(c.gates[10], Gate::rz(0, Phase::zero()));
  EXPECT_EQ(c.gates[11], Gate::rz(0, Phase::pi()));
  EXPECT_EQ(c.gates[12], Gate::cnot(0, 1));
  EXPECT_EQ(c.gates[13], Gate::cz(1, 2));
  EXPECT_EQ(c.gates[14], Gate::swap(2, 0));
}

TEST(Qasm, RoundTrip) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    const Circuit c = zxtest::random_circuit(rng, 1 + t % 5, 30);
    EXPECT_EQ(parse_qasm(emit_qasm(c)), c);
  }
  const Circuit empty = make(2, {});
  EXPECT_EQ(parse_qasm(emit_qasm(empty)), empty);
  const std::string zero = emit_qasm(make(1, {Gate::rz(0, Phase::zero())}));
  EXPECT_NE(zero.find("rz(0*pi)"), std::string::npos);
}

TEST(Qasm, SyntaxErrorsCarryPosition) {
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0] q[1];\n");
    FAIL();
  } catch (const QasmSyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 9u);
  }
  EXPECT_THROW(parse_qasm("OPENQASM 3.0;\nqreg q[1];"), QasmSyntaxError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nh q[1];"), QasmSyntaxError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nrz(pi/0) q[0];"), QasmSyntaxError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[0];"), QasmSyntaxError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nqreg r[1];"), QasmSyntaxError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nh q[0]"), QasmSyntaxError);
}

TEST(Qasm, UnsupportedGatesAreNamed) {
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[3];\nccx q[0],q[1],q[2];\n");
    FAIL();
  } catch (const UnsupportedGate& e) {
    EXPECT_EQ(e.gate(), "ccx");
  }
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nmeasure q[0];"), UnsupportedGate);
}

TEST(GadgetForm, MergesRotationsOnEqualParities) {
  const Circuit c = make(2, {Gate::cnot(0, 1), g1(GateKind::T, 1), Gate::cnot(0, 1),
                             Gate::cnot(0, 1), g1(GateKind::T, 1), Gate::cnot(0, 1)});
  const GadgetForm g = to_gadget_form(c);
  ASSERT_EQ(g.blocks.size(), 1u);
  const auto& pb = std::get<PhaseBlock>(g.blocks[0]);
  ASSERT_EQ(pb.gadgets.size(), 1u);
  EXPECT_EQ(pb.gadgets[0].parity, Parity{3});
  EXPECT_EQ(pb.gadgets[0].phase, Phase::exact(1, 2));
  EXPECT_EQ(pb.exit, (std::vector<Parity>{1, 2}));
}

TEST(GadgetForm, ResynthesisIsEquivalent) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const Circuit c = zxtest::random_circuit(rng, 2 + t % 3, 25);
    const Circuit r = resynthesize(to_gadget_form(c));
    EXPECT_TRUE(verify_equiv(c, r, 1e-8).equal) << describe(c);
    EXPECT_TRUE(verify_equiv(c, fold_phases(c), 1e-8).equal) << describe(c);
  }
}

TEST(GadgetForm, LinearSynthesisRealisesTheMap) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 5;
    // random invertible map from a random CNOT sequence
    std::vector<Parity> rows(n);
    for (std::size_t q = 0; q < n; ++q) rows[q] = Parity{1} << q;
    for (int k = 0; k < 12; ++k) {
      const std::size_t a = rng() % n, b = rng() % n;
      if (a != b) rows[b] ^= rows[a];
    }
    std::vector<Parity> state(n);
    for (std::size_t q = 0; q < n; ++q) state[q] = Parity{1} << q;
    for (const Gate& g : synthesize_linear(rows)) state[g.q1] ^= state[g.q0];
    EXPECT_EQ(state, rows);
  }
}

TEST(Peephole, CancelsAndMerges) {
  const Circuit c = make(2, {g1(GateKind::H, 0), g1(GateKind::H, 0), g1(GateKind::T, 1),
                             Gate::cnot(1, 0), g1(GateKind::T, 1), Gate::cz(0, 1),
                             Gate::cz(1, 0), g1(GateKind::S, 0), g1(GateKind::Sdg, 0)});
  const Circuit p = peephole(c);
  EXPECT_EQ(p, make(2, {Gate::rz(1, Phase::exact(1, 2)), Gate::cnot(1, 0)}));
  EXPECT_TRUE(verify_equiv(c, p, 1e-10).equal);
}

TEST(Peephole, NeverWorsensMetrics) {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 100; ++t) {
    const Circuit c = zxtest::random_circuit(rng, 3, 30);
    const Circuit p = peephole(c);
    EXPECT_TRUE(no_worse(metrics(p), metrics(c)));
    EXPECT_TRUE(verify_equiv(c, p, 1e-8).equal);
  }
}

TEST(Optimize, OppositeGadgetsVanish) {
  const Circuit c = make(2, {Gate::cnot(0, 1), g1(GateKind::T, 1), Gate::cnot(0, 1),
                             Gate::cnot(0, 1), g1(GateKind::Tdg, 1), Gate::cnot(0, 1)});
  const OptimizeResult r = optimize(c);
  EXPECT_TRUE(r.circuit.gates.empty());
  EXPECT_EQ(r.before.t_count, 2u);
  EXPECT_EQ(r.after.t_count, 0u);
  EXPECT_TRUE(r.verified);
}

TEST(Optimize, RandomCircuitsStayEquivalentAndNoWorse) {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 40; ++t) {
    const Circuit c = zxtest::random_circuit(rng, 4, 40);
    const OptimizeResult r = optimize(c);
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(verify_equiv(c, r.circuit, 1e-8).equal);
    EXPECT_TRUE(no_worse(r.after, r.before));
  }
}

TEST(Optimize, MergesTRotationsThroughCnots) {
  // T on the parity q0^q1 twice, separated by unrelated CNOT bookkeeping
  const Circuit c = make(3, {Gate::cnot(0, 1), g1(GateKind::T, 1), Gate::cnot(1, 2),
                             Gate::cnot(1, 2), g1(GateKind::T, 1), Gate::cnot(0, 1)});
  const OptimizeResult r = optimize(c);
  EXPECT_EQ(r.after.t_count, 0u);
  EXPECT_TRUE(r.verified);
}
