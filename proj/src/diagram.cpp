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

#include "zxkit/diagram.hpp"

#include <algorithm>
#include <set>

#include "zxkit/errors.hpp"

namespace zxkit {

std::string to_string(VertexType t) {
  switch (t) {
    case VertexType::Z:
      return "Z";
    case VertexType::X:
      return "X";
    case VertexType::H:
      return "H";
    case VertexType::Boundary:
      return "B";
  }
  return "?";
}

namespace {
const std::map<VertexId, unsigned> kNoNeighbours;
}

VertexId Diagram::add_vertex(VertexType type, Phase phase) {
  VertexId id = next_id_++;
  if (!is_spider_type(type)) phase = Phase();
  vertices_.emplace(id, Vertex{type, phase});
  adj_[id];
  return id;
}

VertexId Diagram::add_input() {
  VertexId v = add_vertex(VertexType::Boundary);
  inputs_.push_back(v);
  return v;
}

VertexId Diagram::add_output() {
  VertexId v = add_vertex(VertexType::Boundary);
  outputs_.push_back(v);
  return v;
}

void Diagram::add_edge(VertexId a, VertexId b, unsigned mult) {
  if (!has_vertex(a) || !has_vertex(b))
    throw IllFormed("edge touches a nonexistent vertex");
  if (mult == 0) return;
  adj_[a][b] += mult;
  if (a != b) adj_[b][a] += mult;
}

void Diagram::remove_edge(VertexId a, VertexId b, unsigned mult) {
  unsigned have = multiplicity(a, b);
  if (have < mult) throw IllFormed("removing more edges than present");
  if (have == mult) {
    adj_[a].erase(b);
    adj_[b].erase(a);
    return;
  }
  adj_[a][b] -= mult;
  if (a != b) adj_[b][a] -= mult;
}

unsigned Diagram::remove_all_edges(VertexId a, VertexId b) {
  unsigned m = multiplicity(a, b);
  if (m) remove_edge(a, b, m);
  return m;
}

void Diagram::remove_vertex(VertexId v) {
  if (!has_vertex(v)) throw IllFormed("removing a nonexistent vertex");
  for (const auto& [w, m] : adj_.at(v)) {
    if (w != v) adj_[w].erase(v);
  }
  adj_.erase(v);
  vertices_.erase(v);
  std::erase(inputs_, v);
  std::erase(outputs_, v);
}

void Diagram::set_phase(VertexId v, Phase p) {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw IllFormed("no such vertex");
  it->second.phase = p;
}

void Diagram::set_type(VertexId v, VertexType t) {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw IllFormed("no such vertex");
  it->second.type = t;
}

void Diagram::splice_out(VertexId v) {
  if (degree(v) != 2) throw IllFormed("splice_out needs a degree-2 vertex");
  if (self_loops(v) == 1) {
    remove_vertex(v);
    scalar_ *= Scalar(Complex(2, 0));
    return;
  }
  std::vector<VertexId> ends;
  for (const auto& [w, m] : neighbours(v))
    for (unsigned i = 0; i < m; ++i) ends.push_back(w);
  remove_vertex(v);
  VertexId x = ends[0], y = ends[1];
  if (x == y && type(x) == VertexType::H) {
    remove_vertex(x);
    scalar_ = Scalar::zero();
    return;
  }
  add_edge(x, y);
}

const Vertex& Diagram::vertex(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end())
    throw IllFormed("no vertex with id " + std::to_string(v));
  return it->second;
}

const std::map<VertexId, unsigned>& Diagram::neighbours(VertexId v) const {
  auto it = adj_.find(v);
  return it == adj_.end() ? kNoNeighbours : it->second;
}

unsigned Diagram::multiplicity(VertexId a, VertexId b) const {
  auto it = adj_.find(a);
  if (it == adj_.end()) return 0;
  auto jt = it->second.find(b);
  return jt == it->second.end() ? 0 : jt->second;
}

unsigned Diagram::degree(VertexId v) const {
  unsigned d = 0;
  for (const auto& [w, m] : neighbours(v)) d += (w == v) ? 2 * m : m;
  return d;
}

std::vector<Edge> Diagram::edges() const {
  std::vector<Edge> out;
  for (const auto& [a, nbrs] : adj_)
    for (const auto& [b, m] : nbrs)
      if (a <= b) out.push_back({a, b, m});
  return out;
}

std::size_t Diagram::total_edge_multiplicity() const {
  std::size_t total = 0;
  for (const auto& [a, nbrs] : adj_)
    for (const auto& [b, m] : nbrs)
      if (a <= b) total += m;
  return total;
}

bool Diagram::is_input(VertexId v) const {
  return std::find(inputs_.begin(), inputs_.end(), v) != inputs_.end();
}

bool Diagram::is_output(VertexId v) const {
  return std::find(outputs_.begin(), outputs_.end(), v) != outputs_.end();
}

VertexId Diagram::absorb(const Diagram& other) {
  VertexId offset = next_id_;
  for (const auto& [v, data] : other.vertices_) {
    vertices_.emplace(v + offset, data);
    adj_[v + offset];
  }
  for (const auto& e : other.edges()) add_edge(e.a + offset, e.b + offset, e.mult);
  next_id_ = offset + other.next_id_;
  scalar_ *= other.scalar_;
  return offset;
}

void Diagram::validate() const {
  std::set<VertexId> seen;
  auto check_list = [&](const std::vector<VertexId>& list, const char* what) {
    for (VertexId v : list) {
      if (!has_vertex(v))
        throw IllFormed(std::string(what) + " refers to a missing vertex");
      if (type(v) != VertexType::Boundary)
        throw IllFormed(std::string(what) + " refers to a non-boundary vertex");
      if (!seen.insert(v).second)
        throw IllFormed("boundary " + std::to_string(v) + " listed twice");
    }
  };
  check_list(inputs_, "inputs");
  check_list(outputs_, "outputs");
  for (const auto& [v, data] : vertices_) {
    if (v >= next_id_) throw IllFormed("vertex id beyond id counter");
    for (const auto& [w, m] : neighbours(v)) {
      if (!has_vertex(w)) throw IllFormed("edge touches a nonexistent vertex");
      if (m == 0 || multiplicity(w, v) != m)
        throw IllFormed("asymmetric adjacency");
    }
    switch (data.type) {
      case VertexType::Boundary:
        if (!seen.count(v))
          throw IllFormed("boundary " + std::to_string(v) + " is not listed");
        if (self_loops(v)) throw IllFormed("self-loop on a boundary");
        if (degree(v) != 1)
          throw IllFormed("boundary " + std::to_string(v) + " has degree " +
                          std::to_string(degree(v)));
        break;
      case VertexType::H:
        if (self_loops(v)) throw IllFormed("self-loop on an H-box");
        if (degree(v) != 2)
          throw IllFormed("H-box " + std::to_string(v) + " has degree " +
                          std::to_string(degree(v)));
        break;
      default:
        break;
    }
    if (!is_spider_type(data.type) && !data.phase.is_zero())
      throw IllFormed("phase on a non-spider vertex");
  }
}

bool Diagram::operator==(const Diagram& o) const {
  return vertices_ == o.vertices_ && edges() == o.edges() &&
         inputs_ == o.inputs_ && outputs_ == o.outputs_ &&
         scalar_ == o.scalar_;
}

Diagram identity(std::size_t n) {
  Diagram d;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId in = d.add_input();
    VertexId out = d.add_output();
    d.add_edge(in, out);
  }
  return d;
}

Diagram spider(VertexType type, Phase phase, std::size_t m, std::size_t n) {
  if (!is_spider_type(type)) throw IllFormed("spider needs type Z or X");
  if (m + n == 0)
    throw IllFormed("a spider without legs is a scalar, not a diagram");
  Diagram d;
  std::vector<VertexId> ins, outs;
  for (std::size_t i = 0; i < m; ++i) ins.push_back(d.add_input());
  VertexId s = d.add_spider(type, phase);
  for (std::size_t i = 0; i < n; ++i) outs.push_back(d.add_output());
  for (VertexId b : ins) d.add_edge(b, s);
  for (VertexId b : outs) d.add_edge(s, b);
  return d;
}

Diagram hadamard() {
  Diagram d;
  VertexId in = d.add_input();
  VertexId h = d.add_vertex(VertexType::H);
  VertexId out = d.add_output();
  d.add_edge(in, h);
  d.add_edge(h, out);
  return d;
}

Diagram compose_seq(const Diagram& first, const Diagram& second) {
  if (first.outputs().size() != second.inputs().size())
    throw ArityMismatch(
        "cannot compose " + std::to_string(first.outputs().size()) +
        " outputs with " + std::to_string(second.inputs().size()) + " inputs");
  Diagram r = first;
  VertexId off = r.absorb(second);
  std::vector<VertexId> glued;
  for (std::size_t i = 0; i < first.outputs().size(); ++i) {
    VertexId o = first.outputs()[i];
    VertexId b = second.inputs()[i] + off;
    r.add_edge(o, b);
    glued.push_back(o);
    glued.push_back(b);
  }
  std::vector<VertexId> outs;
  for (VertexId v : second.outputs()) outs.push_back(v + off);
  r.set_outputs(std::move(outs));
  for (VertexId v : glued)
    if (r.has_vertex(v)) r.splice_out(v);
  return r;
}

Diagram compose_par(const Diagram& left, const Diagram& right) {
  Diagram r = left;
  VertexId off = r.absorb(right);
  std::vector<VertexId> ins = left.inputs(), outs = left.outputs();
  for (VertexId v : right.inputs()) ins.push_back(v + off);
  for (VertexId v : right.outputs()) outs.push_back(v + off);
  r.set_inputs(std::move(ins));
  r.set_outputs(std::move(outs));
  return r;
}

Diagram adjoint(const Diagram& d) {
  Diagram r = d;
  for (const auto& [v, data] : d.vertices())
    if (is_spider_type(data.type)) r.set_phase(v, -data.phase);
  r.set_inputs(d.outputs());
  r.set_outputs(d.inputs());
  r.set_scalar(d.scalar().conj());
  return r;
}

Diagram relabel(const Diagram& d, const std::map<VertexId, VertexId>& map) {
  // ids are handed out in increasing order, so add targets in ascending order
  std::map<VertexId, VertexId> inverse;
  for (const auto& [v, data] : d.vertices()) inverse[map.at(v)] = v;
  Diagram r;
  for (const auto& [w, v] : inverse) {
    r.reserve_ids(w);
    r.add_vertex(d.type(v), d.phase(v));
  }
  for (const auto& e : d.edges()) r.add_edge(map.at(e.a), map.at(e.b), e.mult);
  std::vector<VertexId> ins, outs;
  for (VertexId v : d.inputs()) ins.push_back(map.at(v));
  for (VertexId v : d.outputs()) outs.push_back(map.at(v));
  r.set_inputs(std::move(ins));
  r.set_outputs(std::move(outs));
  r.set_scalar(d.scalar());
  return r;
}

}  // namespace zxkit
