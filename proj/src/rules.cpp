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

#include "zxkit/rules.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <stdexcept>

#include "zxkit/errors.hpp"
#include "zxkit/recolor.hpp"

namespace zxkit {

std::string to_string(Fragment f) {
  switch (f) {
    case Fragment::Any:
      return "any";
    case Fragment::Clifford:
      return "clifford";
    case Fragment::CliffordT:
      return "clifford+t";
  }
  return "?";
}

std::vector<VertexId> Match::sorted_vertices() const {
  std::vector<VertexId> v = vertices;
  std::sort(v.begin(), v.end());
  return v;
}

std::string Match::fingerprint() const {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  feed(rule);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    feed(std::to_string(vertices[i]));
    feed(to_string(bound[i].type) + bound[i].phase.to_string());
  }
  for (const EdgeBinding& e : edges)
    feed(std::to_string(e.a) + "-" + std::to_string(e.b) + "x" + std::to_string(e.mult));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

EdgeBinding bind(const Diagram& d, VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return {a, b, d.multiplicity(a, b)};
}

Match make_match(const Diagram& d, const char* rule, std::vector<VertexId> vs,
                 std::vector<EdgeBinding> es) {
  Match m;
  m.rule = rule;
  for (VertexId v : vs) m.bound.push_back(d.vertex(v));
  m.vertices = std::move(vs);
  m.edges = std::move(es);
  return m;
}

/// Every edge incident to v, bound with its current multiplicity.
void bind_incident(const Diagram& d, VertexId v, std::vector<EdgeBinding>& out) {
  for (const auto& [w, m] : d.neighbours(v)) {
    EdgeBinding e = bind(d, v, w);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
}

/// The neighbour of a degree-2, loop-free vertex other than `from`; requires
/// both edges to be simple.
std::optional<VertexId> other_end(const Diagram& d, VertexId v, VertexId from) {
  if (d.degree(v) != 2 || d.self_loops(v) != 0) return std::nullopt;
  for (const auto& [w, m] : d.neighbours(v)) {
    if (m != 1) return std::nullopt;
    if (w != from) return w;
  }
  return std::nullopt;
}

bool plain_deg(const Diagram& d, VertexId v, unsigned deg) {
  if (d.degree(v) != deg || d.self_loops(v) != 0) return false;
  for (const auto& [w, m] : d.neighbours(v))
    if (m != 1) return false;
  return true;
}

// ---------------------------------------------------------------- fusion

std::vector<Match> find_fusion(const Diagram& d) {
  std::vector<Match> out;
  for (const Edge& e : d.edges()) {
    if (e.a == e.b || !d.is_spider(e.a) || d.type(e.a) != d.type(e.b)) continue;
    out.push_back(make_match(d, "fusion", {e.a, e.b}, {{e.a, e.b, e.mult}}));
  }
  return out;
}

std::vector<VertexId> rewrite_fusion(Diagram& d, const Match& m) {
  const VertexId u = m.vertices[0], v = m.vertices[1];
  d.remove_all_edges(u, v);
  d.set_phase(u, d.phase(u) + d.phase(v));
  const auto nbrs = d.neighbours(v);
  for (const auto& [w, k] : nbrs) d.add_edge(u, w == v ? u : w, k);
  d.remove_vertex(v);
  return {u};
}

// ------------------------------------------------------ identity-removal

std::vector<Match> find_identity(const Diagram& d) {
  std::vector<Match> out;
  for (const auto& [v, data] : d.vertices()) {
    if (!is_spider_type(data.type) || !data.phase.is_zero()) continue;
    if (d.degree(v) != 2 || d.self_loops(v) != 0) continue;
    const auto& nb = d.neighbours(v);
    std::vector<EdgeBinding> es;
    if (nb.size() == 1) {
      const VertexId a = nb.begin()->first;
      // a wire closed onto a single vertex; tracing out an H-box is left alone
      if (!d.is_spider(a)) continue;
    }
    for (const auto& [w, k] : nb) es.push_back(bind(d, v, w));
    out.push_back(make_match(d, "identity-removal", {v}, es));
  }
  return out;
}

std::vector<VertexId> rewrite_identity(Diagram& d, const Match& m) {
  d.splice_out(m.vertices[0]);
  return {};
}

// ----------------------------------------------------- self-loop-removal

std::vector<Match> find_self_loop(const Diagram& d) {
  std::vector<Match> out;
  for (const auto& [v, data] : d.vertices()) {
    if (!is_spider_type(data.type) || d.self_loops(v) == 0) continue;
    out.push_back(make_match(d, "self-loop-removal", {v}, {bind(d, v, v)}));
  }
  return out;
}

std::vector<VertexId> rewrite_self_loop(Diagram& d, const Match& m) {
  d.remove_all_edges(m.vertices[0], m.vertices[0]);
  return {m.vertices[0]};
}

// ---------------------------------------------------------- colour-change

std::vector<Match> find_colour_change(const Diagram& d) {
  std::vector<Match> out;
  for (const auto& [v, data] : d.vertices()) {
    if (!is_spider_type(data.type) || d.degree(v) == 0 || d.self_loops(v) != 0) continue;
    std::vector<VertexId> hs;
    bool ok = true;
    for (const auto& [h, k] : d.neighbours(v)) {
      if (k != 1 || d.type(h) != VertexType::H) {
        ok = false;
        break;
      }
      hs.push_back(h);
    }
    if (!ok) continue;
    std::vector<EdgeBinding> es;
    for (VertexId h : hs) {
      auto x = other_end(d, h, v);
      if (!x || std::find(hs.begin(), hs.end(), *x) != hs.end()) {
        ok = false;
        break;
      }
      es.push_back(bind(d, v, h));
      es.push_back(bind(d, h, *x));
    }
    if (!ok) continue;
    std::vector<VertexId> vs{v};
    vs.insert(vs.end(), hs.begin(), hs.end());
    out.push_back(make_match(d, "colour-change", vs, es));
  }
  return out;
}

std::vector<VertexId> rewrite_colour_change(Diagram& d, const Match& m) {
  const VertexId v = m.vertices[0];
  d.set_type(v, opposite_colour(d.type(v)));
  for (std::size_t i = 1; i < m.vertices.size(); ++i) {
    const VertexId h = m.vertices[i];
    const VertexId x = *other_end(d, h, v);
    d.remove_vertex(h);
    d.add_edge(v, x);
  }
  return {};
}

// -------------------------------------------------------------- hh-cancel

std::vector<Match> find_hh(const Diagram& d) {
  std::vector<Match> out;
  for (const auto& [h1, data] : d.vertices()) {
    if (data.type != VertexType::H) continue;
    for (const auto& [h2, k] : d.neighbours(h1)) {
      if (h2 <= h1 || k != 1 || d.type(h2) != VertexType::H) continue;
      auto a = other_end(d, h1, h2);
      auto b = other_end(d, h2, h1);
      if (!a || !b) continue;
      if (*a == *b && d.type(*a) == VertexType::H) continue;
      out.push_back(
          make_match(d, "hh-cancel", {h1, h2}, {bind(d, h1, h2), bind(d, *a, h1), bind(d, h2, *b)}));
    }
  }
  return out;
}

std::vector<VertexId> rewrite_hh(Diagram& d, const Match& m) {
  const VertexId h1 = m.vertices[0], h2 = m.vertices[1];
  const VertexId a = *other_end(d, h1, h2), b = *other_end(d, h2, h1);
  d.remove_vertex(h1);
  d.remove_vertex(h2);
  d.add_edge(a, b);
  return {};
}

// ---------------------------------------------------------------- euler-h

std::vector<Match> find_euler(const Diagram& d) {
  std::vector<Match> out;
  for (const auto& [h, data] : d.vertices()) {
    if (data.type != VertexType::H) continue;
    std::vector<EdgeBinding> es;
    bind_incident(d, h, es);
    out.push_back(make_match(d, "euler-h", {h}, es));
  }
  return out;
}

std::vector<VertexId> rewrite_euler(Diagram& d, const Match& m) {
  const VertexId h = m.vertices[0];
  std::vector<VertexId> ends;
  for (const auto& [w, k] : d.neighbours(h))
    for (unsigned i = 0; i < k; ++i) ends.push_back(w);
  d.remove_vertex(h);
  const Phase q = Phase::exact(1, 2);
  const VertexId z1 = d.add_spider(VertexType::Z, q);
  const VertexId x = d.add_spider(VertexType::X, q);
  const VertexId z2 = d.add_spider(VertexType::Z, q);
  d.add_edge(ends[0], z1);
  d.add_edge(z1, x);
  d.add_edge(x, z2);
  d.add_edge(z2, ends[1]);
  return {};
}

// ------------------------------------------------------------------- copy

// Target spiders are limited to degree 3 so that the rewrite never adds
// vertices: copying through a degree-k spider leaves k-1 new states.
constexpr unsigned kCopyMaxDegree = 3;

std::vector<Match> find_copy(const Diagram& d) {
  std::vector<Match> out;
  for (const auto& [s, data] : d.vertices()) {
    if (!is_spider_type(data.type) || !data.phase.is_pauli() || d.degree(s) != 1) continue;
    const auto [v, k] = *d.neighbours(s).begin();
    if (v == s || !d.is_spider(v) || d.type(v) == data.type) continue;
    if (d.self_loops(v) != 0 || d.degree(v) > kCopyMaxDegree) continue;
    std::vector<EdgeBinding> es;
    bind_incident(d, v, es);
    out.push_back(make_match(d, "copy", {s, v}, es));
  }
  return out;
}

std::vector<VertexId> rewrite_copy(Diagram& d, const Match& m) {
  const VertexId s = m.vertices[0], v = m.vertices[1];
  const VertexType c = d.type(s);
  const Phase a = d.phase(s);
  std::vector<std::pair<VertexId, unsigned>> legs;
  for (const auto& [w, k] : d.neighbours(v))
    if (w != s) legs.emplace_back(w, k);
  d.remove_vertex(s);
  d.remove_vertex(v);
  std::vector<VertexId> fresh;
  for (const auto& [w, k] : legs)
    for (unsigned i = 0; i < k; ++i) {
      const VertexId t = d.add_spider(c, a);
      d.add_edge(t, w);
      fresh.push_back(t);
    }
  return fresh;
}

Scalar copy_factor(const Diagram& d, const Match& m) {
  const VertexId s = m.vertices[0], v = m.vertices[1];
  Scalar f = Scalar::sqrt2_pow(2 - static_cast<int>(d.degree(v)));
  if (d.phase(s).is_pi()) f *= Scalar::phase(d.phase(v));
  return f;
}

// ------------------------------------------------------------- pi-commute

std::vector<Match> find_pi_commute(const Diagram& d) {
  std::vector<Match> out;
  for (const auto& [p, data] : d.vertices()) {
    if (!is_spider_type(data.type) || !data.phase.is_pi() || !plain_deg(d, p, 2)) continue;
    for (const auto& [z, k] : d.neighbours(p)) {
      if (d.type(z) != opposite_colour(data.type) || d.phase(z).is_pi()) continue;
      auto w = other_end(d, z, p);
      if (!w || !d.is_output(*w)) continue;
      const VertexId u = *other_end(d, p, z);
      if (d.is_output(u)) continue;
      out.push_back(make_match(d, "pi-commute", {p, z},
                               {bind(d, u, p), bind(d, p, z), bind(d, z, *w)}));
    }
  }
  return out;
}

std::vector<VertexId> rewrite_pi_commute(Diagram& d, const Match& m) {
  const VertexId p = m.vertices[0], z = m.vertices[1];
  const VertexId u = *other_end(d, p, z), w = *other_end(d, z, p);
  d.remove_edge(u, p);
  d.remove_edge(p, z);
  d.remove_edge(z, w);
  d.add_edge(u, z);
  d.add_edge(z, p);
  d.add_edge(p, w);
  d.set_phase(z, -d.phase(z));
  return {};
}

Scalar pi_commute_factor(const Diagram& d, const Match& m) {
  return Scalar::phase(d.phase(m.vertices[1]));
}

// -------------------------------------------------------------- bialgebra

bool bialgebra_corner(const Diagram& d, VertexId v, VertexType t) {
  return d.type(v) == t && d.phase(v).is_zero() && plain_deg(d, v, 3);
}

/// The neighbour of a degree-3 corner outside the given pair.
VertexId third(const Diagram& d, VertexId v, VertexId a, VertexId b) {
  for (const auto& [w, k] : d.neighbours(v))
    if (w != a && w != b) return w;
  return v;
}

std::vector<Match> find_bialgebra(const Diagram& d) {
  std::vector<Match> out;
  for (const auto& [z1, data] : d.vertices()) {
    if (!bialgebra_corner(d, z1, VertexType::Z)) continue;
    std::vector<VertexId> xs;
    for (const auto& [x, k] : d.neighbours(z1))
      if (bialgebra_corner(d, x, VertexType::X)) xs.push_back(x);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        const VertexId x1 = xs[i], x2 = xs[j];
        for (const auto& [z2, k] : d.neighbours(x1)) {
          if (z2 <= z1 || !bialgebra_corner(d, z2, VertexType::Z)) continue;
          if (d.multiplicity(z2, x2) != 1) continue;
          const VertexId e1 = third(d, z1, x1, x2), e2 = third(d, z2, x1, x2);
          const VertexId f1 = third(d, x1, z1, z2), f2 = third(d, x2, z1, z2);
          const std::set<VertexId> square{z1, x1, z2, x2};
          if (square.count(e1) || square.count(e2) || square.count(f1) || square.count(f2))
            continue;
          out.push_back(make_match(
              d, "bialgebra", {z1, x1, z2, x2},
              {bind(d, z1, x1), bind(d, x1, z2), bind(d, z2, x2), bind(d, x2, z1),
               bind(d, z1, e1), bind(d, z2, e2), bind(d, x1, f1), bind(d, x2, f2)}));
        }
      }
  }
  return out;
}

std::vector<VertexId> rewrite_bialgebra(Diagram& d, const Match& m) {
  const VertexId z1 = m.vertices[0], x1 = m.vertices[1];
  const VertexId z2 = m.vertices[2], x2 = m.vertices[3];
  const VertexId e1 = third(d, z1, x1, x2), e2 = third(d, z2, x1, x2);
  const VertexId f1 = third(d, x1, z1, z2), f2 = third(d, x2, z1, z2);
  for (VertexId v : {z1, x1, z2, x2}) d.remove_vertex(v);
  const VertexId nx = d.add_spider(VertexType::X);
  const VertexId nz = d.add_spider(VertexType::Z);
  d.add_edge(nx, e1);
  d.add_edge(nx, e2);
  d.add_edge(nz, f1);
  d.add_edge(nz, f2);
  d.add_edge(nx, nz);
  return {};
}

// ------------------------------------------------------------------- hopf

std::vector<Match> find_hopf(const Diagram& d) {
  std::vector<Match> out;
  for (const Edge& e : d.edges()) {
    if (e.a == e.b || e.mult < 2 || !d.is_spider(e.a) || !d.is_spider(e.b)) continue;
    if (d.type(e.a) == d.type(e.b)) continue;
    out.push_back(make_match(d, "hopf", {e.a, e.b}, {{e.a, e.b, e.mult}}));
  }
  return out;
}

std::vector<VertexId> rewrite_hopf(Diagram& d, const Match& m) {
  const unsigned k = m.edges[0].mult;
  d.remove_edge(m.vertices[0], m.vertices[1], k - k % 2);
  return {m.vertices[0], m.vertices[1]};
}

Scalar hopf_factor(const Diagram&, const Match& m) {
  return Scalar::sqrt2_pow(-2 * static_cast<int>(m.edges[0].mult / 2));
}

// -------------------------------------------------------------- y-convert

bool quarter_pair(const Phase& a, const Phase& b) {
  const Phase q = Phase::exact(1, 2), r = Phase::exact(3, 2);
  return (a == q && b == r) || (a == r && b == q);
}

std::vector<Match> find_y_convert(const Diagram& d) {
  std::vector<Match> out;
  for (const auto& [z, data] : d.vertices()) {
    if (!is_spider_type(data.type) || !plain_deg(d, z, 2)) continue;
    const auto& nb = d.neighbours(z);
    if (nb.size() != 2) continue;
    const VertexId p = nb.begin()->first, q = std::next(nb.begin())->first;
    const VertexType outer = opposite_colour(data.type);
    if (d.type(p) != outer || d.type(q) != outer) continue;
    if (!plain_deg(d, p, 2) || !plain_deg(d, q, 2)) continue;
    if (!quarter_pair(d.phase(p), d.phase(q))) continue;
    std::vector<EdgeBinding> es;
    bind_incident(d, p, es);
    bind_incident(d, z, es);
    bind_incident(d, q, es);
    out.push_back(make_match(d, "y-convert", {p, z, q}, es));
  }
  return out;
}

std::vector<VertexId> rewrite_y_convert(Diagram& d, const Match& m) {
  const VertexId p = m.vertices[0], z = m.vertices[1], q = m.vertices[2];
  const VertexType inner = d.type(z), outer = d.type(p);
  d.set_type(z, outer);
  for (VertexId v : {p, q}) {
    d.set_type(v, inner);
    d.set_phase(v, -d.phase(v));
  }
  return {};
}

// ---------------------------------------------------------- gadget-cancel

struct Hub {
  VertexId leaf;
  std::set<VertexId> wires;
};

std::optional<Hub> as_hub(const Diagram& d, VertexId h) {
  if (!d.is_spider(h) || !d.phase(h).is_zero() || d.self_loops(h) != 0) return std::nullopt;
  const VertexType leg = opposite_colour(d.type(h));
  Hub hub{h, {}};
  bool have_leaf = false;
  for (const auto& [w, k] : d.neighbours(h)) {
    if (k != 1 || d.type(w) != leg) return std::nullopt;
    if (d.degree(w) == 1) {
      if (have_leaf) return std::nullopt;
      have_leaf = true;
      hub.leaf = w;
    } else {
      hub.wires.insert(w);
    }
  }
  if (!have_leaf || hub.wires.empty()) return std::nullopt;
  return hub;
}

std::vector<Match> find_gadget(const Diagram& d) {
  std::vector<Match> out;
  for (const auto& [h1, data] : d.vertices()) {
    auto g1 = as_hub(d, h1);
    if (!g1) continue;
    std::set<VertexId> partners;
    for (const auto& [h2, k] : d.neighbours(*g1->wires.begin()))
      if (h2 > h1 && d.type(h2) == data.type) partners.insert(h2);
    for (VertexId h2 : partners) {
      auto g2 = as_hub(d, h2);
      if (!g2 || g2->wires != g1->wires) continue;
      if (!(d.phase(g1->leaf) + d.phase(g2->leaf)).is_zero()) continue;
      std::vector<EdgeBinding> es;
      bind_incident(d, h1, es);
      bind_incident(d, h2, es);
      out.push_back(make_match(d, "gadget-cancel", {h1, g1->leaf, h2, g2->leaf}, es));
    }
  }
  return out;
}

std::vector<VertexId> rewrite_gadget(Diagram& d, const Match& m) {
  for (VertexId v : m.vertices) d.remove_vertex(v);
  return {};
}

Scalar gadget_factor(const Diagram& d, const Match& m) {
  const int n = static_cast<int>(d.degree(m.vertices[0])) - 1;
  return Scalar::sqrt2_pow(2 * (1 - n));
}

// ---------------------------------------------------------------- recolor

std::vector<Match> find_recolor(const Diagram& d) {
  std::vector<Match> out;
  for (const auto& [q, data] : d.vertices()) {
    if (!is_spider_type(data.type) || !plain_deg(d, q, 2)) continue;
    const auto& nb = d.neighbours(q);
    if (nb.size() != 2) continue;
    const VertexId p = nb.begin()->first, r = std::next(nb.begin())->first;
    const VertexType outer = opposite_colour(data.type);
    if (d.type(p) != outer || d.type(r) != outer) continue;
    if (!plain_deg(d, p, 2) || !plain_deg(d, r, 2)) continue;
    std::vector<EdgeBinding> es;
    bind_incident(d, p, es);
    bind_incident(d, q, es);
    bind_incident(d, r, es);
    out.push_back(make_match(d, "recolor", {p, q, r}, es));
  }
  return out;
}

std::vector<VertexId> rewrite_recolor(Diagram& d, const Match& m) {
  const VertexId p = m.vertices[0], q = m.vertices[1], r = m.vertices[2];
  const RecolorResult res = recolor_triple(d.phase(p), d.phase(q), d.phase(r));
  const VertexType inner = d.type(q), outer = d.type(p);
  d.set_type(p, inner);
  d.set_type(q, outer);
  d.set_type(r, inner);
  d.set_phase(p, res.alpha);
  d.set_phase(q, res.beta);
  d.set_phase(r, res.gamma);
  return {};
}

Scalar recolor_factor(const Diagram& d, const Match& m) {
  return recolor_triple(d.phase(m.vertices[0]), d.phase(m.vertices[1]),
                        d.phase(m.vertices[2]))
      .scalar;
}

Scalar unit(const Diagram&, const Match&) { return Scalar::one(); }

}  // namespace

std::vector<RewriteRule> build_rules() {
  std::vector<RewriteRule> r;
  r.push_back({"fusion", "merge adjacent same-colour spiders, adding phases", true,
               Fragment::Any, find_fusion, rewrite_fusion, unit, instances::fusion});
  r.push_back({"identity-removal", "drop a phase-0 spider with two legs", true,
               Fragment::Any, find_identity, rewrite_identity, unit,
               instances::identity_removal});
  r.push_back({"self-loop-removal", "delete self-loops on a spider", true, Fragment::Any,
               find_self_loop, rewrite_self_loop, unit, instances::self_loop_removal});
  r.push_back({"colour-change", "absorb H-boxes on every leg by flipping colour", true,
               Fragment::Any, find_colour_change, rewrite_colour_change, unit,
               instances::colour_change});
  r.push_back({"hh-cancel", "two adjacent H-boxes become a wire", true, Fragment::Any,
               find_hh, rewrite_hh, unit, instances::hh_cancel});
  r.push_back({"euler-h", "expand an H-box into Z(pi/2) X(pi/2) Z(pi/2)", false,
               Fragment::Clifford, find_euler, rewrite_euler,
               [](const Diagram&, const Match&) { return Scalar::phase(Phase::exact(-1, 4)); },
               instances::euler_h});
  r.push_back({"copy", "push a Pauli state through an opposite-colour spider", true,
               Fragment::Clifford, find_copy, rewrite_copy, copy_factor, instances::copy});
  r.push_back({"pi-commute", "move a pi spider past an opposite-colour phase", true,
               Fragment::Clifford, find_pi_commute, rewrite_pi_commute, pi_commute_factor,
               instances::pi_commute});
  r.push_back({"bialgebra", "replace a Z/X 4-cycle by a single edge", true, Fragment::Any,
               find_bialgebra, rewrite_bialgebra,
               [](const Diagram&, const Match&) { return Scalar::sqrt2_pow(-1); },
               instances::bialgebra});
  r.push_back({"hopf", "remove pairs of parallel Z-X edges", true, Fragment::Any, find_hopf,
               rewrite_hopf, hopf_factor, instances::hopf});
  r.push_back({"y-convert", "X(s) Z(a) X(-s) to Z(-s) X(a) Z(s) for s = pi/2", false,
               Fragment::Clifford, find_y_convert, rewrite_y_convert, unit,
               instances::y_convert});
  r.push_back({"gadget-cancel", "delete two phase gadgets whose phases cancel", true,
               Fragment::Any, find_gadget, rewrite_gadget, gadget_factor,
               instances::gadget_cancel});
  r.push_back({"recolor", "rewrite a Z X Z chain as X Z X or back", false, Fragment::Any,
               find_recolor, rewrite_recolor, recolor_factor, instances::recolor});
  return r;
}

const std::vector<RewriteRule>& catalog() {
  static const std::vector<RewriteRule> rules = [] {
    std::vector<RewriteRule> rs = build_rules();
    for (const RewriteRule& rule : rs) validate_rule_soundness(rule, 8, 0x5eedULL);
    return rs;
  }();
  return rules;
}

const RewriteRule& rule_by_name(std::string_view name) {
  for (const RewriteRule& r : catalog())
    if (r.name == name) return r;
  throw std::out_of_range("unknown rule '" + std::string(name) + "'");
}

}  // namespace zxkit
