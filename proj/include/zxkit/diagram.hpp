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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "zxkit/phase.hpp"
#include "zxkit/scalar.hpp"

namespace zxkit {

enum class VertexType { Z, X, H, Boundary };

/// "Z", "X", "H" or "B".
std::string to_string(VertexType t);

inline bool is_spider_type(VertexType t) {
  return t == VertexType::Z || t == VertexType::X;
}

inline VertexType opposite_colour(VertexType t) {
  return t == VertexType::Z ? VertexType::X : VertexType::Z;
}

using VertexId = std::size_t;

struct Vertex {
  VertexType type = VertexType::Z;
  Phase phase;  // always zero for H and Boundary

  bool operator==(const Vertex&) const = default;
};

/// An undirected edge with multiplicity; `a <= b`, `a == b` for self-loops.
struct Edge {
  VertexId a;
  VertexId b;
  unsigned mult;

  bool operator==(const Edge&) const = default;
};

/**
 * Open multigraph of spiders, H-boxes and boundary vertices.
 *
 * Inputs and outputs are ordered lists of boundary vertices; the i-th input
 * is the i-th most significant qubit of the column index when the diagram
 * is evaluated (outputs likewise for rows). Parallel edges are stored as
 * multiplicities and self-loops as a multiplicity on (v, v). Vertex ids are
 * never reused: every new vertex gets a fresh id.
 */
class Diagram {
 public:
  Diagram() = default;

  VertexId add_vertex(VertexType type, Phase phase = Phase());
  VertexId add_spider(VertexType type, Phase phase = Phase()) {
    return add_vertex(type, phase);
  }
  /// Appends a fresh boundary to the input list.
  VertexId add_input();
  VertexId add_output();
  void add_edge(VertexId a, VertexId b, unsigned mult = 1);
  /// Lowers the multiplicity of a-b by `mult`; the edge must be that thick.
  void remove_edge(VertexId a, VertexId b, unsigned mult = 1);
  /// Removes every a-b edge and returns the multiplicity removed.
  unsigned remove_all_edges(VertexId a, VertexId b);
  /// Removes a vertex and its incident edges. Boundaries are also dropped
  /// from the input/output lists.
  void remove_vertex(VertexId v);
  void set_phase(VertexId v, Phase p);
  void set_type(VertexId v, VertexType t);

  /**
   * Replaces a degree-2 vertex by a plain wire between its neighbours.
   * A vertex whose only edge is a self-loop becomes a closed circle
   * (scalar x2). A wire closed onto an H-box is the trace of H, which is
   * zero, so the H-box is removed and the scalar becomes zero.
   */
  void splice_out(VertexId v);

  void set_inputs(std::vector<VertexId> ids) { inputs_ = std::move(ids); }
  void set_outputs(std::vector<VertexId> ids) { outputs_ = std::move(ids); }

  const Scalar& scalar() const { return scalar_; }
  void set_scalar(const Scalar& s) { scalar_ = s; }
  void multiply_scalar(const Scalar& s) { scalar_ *= s; }

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  const Vertex& vertex(VertexId v) const;
  VertexType type(VertexId v) const { return vertex(v).type; }
  const Phase& phase(VertexId v) const { return vertex(v).phase; }
  bool is_spider(VertexId v) const { return is_spider_type(type(v)); }
  const std::map<VertexId, Vertex>& vertices() const { return vertices_; }

  /// Neighbours with multiplicities; includes v itself when it has loops.
  const std::map<VertexId, unsigned>& neighbours(VertexId v) const;
  unsigned multiplicity(VertexId a, VertexId b) const;
  unsigned self_loops(VertexId v) const { return multiplicity(v, v); }
  /// Number of edge ends at v (a self-loop counts twice).
  unsigned degree(VertexId v) const;
  /// Every edge once, sorted by (a, b).
  std::vector<Edge> edges() const;
  std::size_t total_edge_multiplicity() const;
  std::size_t num_vertices() const { return vertices_.size(); }

  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }
  bool is_input(VertexId v) const;
  bool is_output(VertexId v) const;

  /// Next id that add_vertex will hand out.
  VertexId next_id() const { return next_id_; }
  /// Raises the id counter so fresh ids start at `id` or later.
  void reserve_ids(VertexId id) {
    if (id > next_id_) next_id_ = id;
  }

  /// Copies every vertex and edge of `other` in with ids shifted by the
  /// returned offset and multiplies the scalars. Boundary lists are left
  /// untouched.
  VertexId absorb(const Diagram& other);

  /// Throws IllFormed on any invariant violation.
  void validate() const;

  /// Same ids, kinds, phases, edges, boundary lists and scalar.
  bool operator==(const Diagram& o) const;

 private:
  std::map<VertexId, Vertex> vertices_;
  std::map<VertexId, std::map<VertexId, unsigned>> adj_;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  Scalar scalar_;
  VertexId next_id_ = 0;
};

/// n parallel wires.
Diagram identity(std::size_t n);
/// Single spider with m inputs and n outputs; rejects m = n = 0.
Diagram spider(VertexType type, Phase phase, std::size_t m, std::size_t n);
/// Single H-box wire; evaluates to the normalised Hadamard matrix.
Diagram hadamard();

/// `first` followed by `second`: outputs of first glued to inputs of second.
Diagram compose_seq(const Diagram& first, const Diagram& second);
/// Disjoint union; boundary lists are left's followed by right's.
Diagram compose_par(const Diagram& left, const Diagram& right);
/// Swaps inputs/outputs, negates phases, conjugates the scalar.
Diagram adjoint(const Diagram& d);

/// Copy of `d` with every id v renamed to map.at(v).
Diagram relabel(const Diagram& d, const std::map<VertexId, VertexId>& map);

}  // namespace zxkit
