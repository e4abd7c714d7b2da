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

#include "zxkit/circuit.hpp"

#include <cmath>
#include <numbers>

#include "zxkit/errors.hpp"

namespace zxkit {

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "h";
    case GateKind::X:
      return "x";
    case GateKind::Z:
      return "z";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::T:
      return "t";
    case GateKind::Tdg:
      return "tdg";
    case GateKind::RZ:
      return "rz";
    case GateKind::RX:
      return "rx";
    case GateKind::CNOT:
      return "cx";
    case GateKind::CZ:
      return "cz";
    case GateKind::SWAP:
      return "swap";
  }
  return "?";
}

bool Gate::z_rotation() const {
  switch (kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::RZ:
      return true;
    default:
      return false;
  }
}

Phase Gate::rotation() const {
  switch (kind) {
    case GateKind::X:
    case GateKind::Z:
      return Phase::pi();
    case GateKind::S:
      return Phase::exact(1, 2);
    case GateKind::Sdg:
      return Phase::exact(3, 2);
    case GateKind::T:
      return Phase::exact(1, 4);
    case GateKind::Tdg:
      return Phase::exact(7, 4);
    case GateKind::RZ:
    case GateKind::RX:
      return phase;
    default:
      return Phase();
  }
}

void Circuit::validate() const {
  for (const Gate& g : gates) {
    if (g.q0 >= width || (g.two_qubit() && g.q1 >= width))
      throw IllFormed(gate_name(g.kind) + " acts outside the register");
    if (g.two_qubit() && g.q0 == g.q1)
      throw IllFormed(gate_name(g.kind) + " repeats a qubit operand");
  }
}

namespace {

bool near_multiple(double rad, double step, double tol) {
  const double k = rad / step;
  return std::abs(k - std::round(k)) * step <= tol;
}

}  // namespace

Metrics metrics(const Circuit& c) {
  Metrics m;
  m.total = c.gates.size();
  for (const Gate& g : c.gates) {
    if (g.two_qubit()) ++m.two_qubit;
    if (g.kind == GateKind::H) ++m.h_count;
    if (!g.z_rotation() && g.kind != GateKind::RX) continue;
    const Phase p = g.rotation();
    if (p.is_t_like(1e-9))
      ++m.t_count;
    else if (!p.is_clifford() && !near_multiple(p.radians(), std::numbers::pi / 2, 1e-9))
      ++m.rotations;
  }
  return m;
}

bool no_worse(const Metrics& a, const Metrics& b) {
  return a.total <= b.total && a.two_qubit <= b.two_qubit && a.t_count <= b.t_count &&
         a.h_count <= b.h_count && a.rotations <= b.rotations;
}

Diagram to_diagram(const Circuit& c) {
  c.validate();
  Diagram d;
  std::vector<VertexId> front;
  for (std::size_t q = 0; q < c.width; ++q) front.push_back(d.add_input());
  auto attach = [&](std::size_t q, VertexId v) {
    d.add_edge(front[q], v);
    front[q] = v;
  };
  auto cnot = [&](std::size_t ctl, std::size_t tgt) {
    const VertexId z = d.add_spider(VertexType::Z);
    const VertexId x = d.add_spider(VertexType::X);
    attach(ctl, z);
    attach(tgt, x);
    d.add_edge(z, x);
    d.multiply_scalar(Scalar::sqrt2_pow(1));
  };
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
        attach(g.q0, d.add_vertex(VertexType::H));
        break;
      case GateKind::X:
      case GateKind::RX:
        attach(g.q0, d.add_spider(VertexType::X, g.rotation()));
        break;
      case GateKind::CNOT:
        cnot(g.q0, g.q1);
        break;
      case GateKind::CZ:
        attach(g.q1, d.add_vertex(VertexType::H));
        cnot(g.q0, g.q1);
        attach(g.q1, d.add_vertex(VertexType::H));
        break;
      case GateKind::SWAP:
        std::swap(front[g.q0], front[g.q1]);
        break;
      default:
        attach(g.q0, d.add_spider(VertexType::Z, g.rotation()));
        break;
    }
  }
  for (std::size_t q = 0; q < c.width; ++q) d.add_edge(front[q], d.add_output());
  return d;
}

Matrix circuit_unitary(const Circuit& c, std::size_t max_legs) {
  EvalOptions opts;
  opts.max_legs = max_legs;
  return eval(to_diagram(c), opts);
}

ScalarWitness verify_equiv(const Circuit& a, const Circuit& b, double tol,
                           std::size_t max_legs) {
  if (a.width != b.width) throw ArityMismatch("circuits have different widths");
  return equal_up_to_scalar(circuit_unitary(a, max_legs), circuit_unitary(b, max_legs), tol);
}

std::string describe(const Circuit& c) {
  std::string out;
  for (const Gate& g : c.gates) {
    if (!out.empty()) out += ' ';
    out += gate_name(g.kind);
    if (g.kind == GateKind::RZ || g.kind == GateKind::RX) out += "[" + g.phase.to_string() + "]";
    out += "(" + std::to_string(g.q0);
    if (g.two_qubit()) out += "," + std::to_string(g.q1);
    out += ")";
  }
  return out;
}

}  // namespace zxkit
