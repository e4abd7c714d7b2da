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

#include "zxkit/rules.hpp"

namespace zxkit::instances {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Phase random_phase(Rng& rng, const InstanceOptions& o) {
  if (o.clifford_phases) return Phase::exact(uniform(rng, 0, 3), 2);
  if (coin(rng, 0.75)) return Phase::exact(uniform(rng, 0, 15), 8);
  return Phase::numeric(std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng));
}

VertexType random_colour(Rng& rng) { return coin(rng) ? VertexType::Z : VertexType::X; }

/// Hangs `count` fresh boundaries off v, each an input or an output at random.
void legs(Diagram& d, VertexId v, int count, Rng& rng) {
  for (int i = 0; i < count; ++i) d.add_edge(v, coin(rng) ? d.add_input() : d.add_output());
}

/// A spider of random colour and phase with `count` boundary legs.
VertexId blob(Diagram& d, Rng& rng, const InstanceOptions& o, int count) {
  const VertexId v = d.add_spider(random_colour(rng), random_phase(rng, o));
  legs(d, v, count, rng);
  return v;
}

}  // namespace

Diagram fusion(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexType c = random_colour(rng);
  const VertexId u = d.add_spider(c, random_phase(rng, o));
  const VertexId v = d.add_spider(c, random_phase(rng, o));
  d.add_edge(u, v, coin(rng, 0.7) ? 1 : uniform(rng, 2, 3));
  legs(d, u, uniform(rng, 0, 3), rng);
  legs(d, v, uniform(rng, 0, 3), rng);
  if (coin(rng, 0.2)) d.add_edge(v, v);
  if (coin(rng, 0.3)) d.add_edge(v, blob(d, rng, o, uniform(rng, 0, 2)));
  return d;
}

Diagram identity_removal(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexId v = d.add_spider(random_colour(rng));
  switch (uniform(rng, 0, 3)) {
    case 0:
      d.add_edge(d.add_input(), v);
      d.add_edge(v, d.add_output());
      break;
    case 1: {
      d.add_edge(blob(d, rng, o, uniform(rng, 1, 2)), v);
      d.add_edge(v, blob(d, rng, o, uniform(rng, 1, 2)));
      break;
    }
    case 2:
      d.add_edge(v, blob(d, rng, o, uniform(rng, 0, 2)), 2);
      break;
    default: {
      // H-box on one side
      const VertexId h = d.add_vertex(VertexType::H);
      d.add_edge(d.add_input(), h);
      d.add_edge(h, v);
      d.add_edge(v, coin(rng) ? d.add_output() : blob(d, rng, o, 1));
      break;
    }
  }
  return d;
}

Diagram self_loop_removal(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexId v = blob(d, rng, o, uniform(rng, 0, 3));
  d.add_edge(v, v, uniform(rng, 1, 2));
  if (coin(rng, 0.3)) d.add_edge(v, blob(d, rng, o, 1));
  return d;
}

Diagram colour_change(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexId v = d.add_spider(random_colour(rng), random_phase(rng, o));
  const int k = uniform(rng, 1, 4);
  VertexId shared = v;
  for (int i = 0; i < k; ++i) {
    const VertexId h = d.add_vertex(VertexType::H);
    d.add_edge(v, h);
    if (coin(rng, 0.3)) {
      if (shared == v) shared = blob(d, rng, o, 1);
      d.add_edge(h, shared);
    } else {
      d.add_edge(h, coin(rng) ? d.add_input() : d.add_output());
    }
  }
  return d;
}

Diagram hh_cancel(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexId h1 = d.add_vertex(VertexType::H);
  const VertexId h2 = d.add_vertex(VertexType::H);
  d.add_edge(h1, h2);
  switch (uniform(rng, 0, 2)) {
    case 0:
      d.add_edge(d.add_input(), h1);
      d.add_edge(h2, d.add_output());
      break;
    case 1:
      d.add_edge(blob(d, rng, o, uniform(rng, 0, 2)), h1);
      d.add_edge(h2, blob(d, rng, o, uniform(rng, 0, 2)));
      break;
    default: {
      const VertexId a = blob(d, rng, o, uniform(rng, 1, 2));
      d.add_edge(a, h1);
      d.add_edge(h2, a);
      break;
    }
  }
  return d;
}

Diagram euler_h(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexId h = d.add_vertex(VertexType::H);
  if (coin(rng)) {
    d.add_edge(d.add_input(), h);
    d.add_edge(h, d.add_output());
  } else {
    d.add_edge(blob(d, rng, o, uniform(rng, 0, 2)), h);
    d.add_edge(h, blob(d, rng, o, uniform(rng, 1, 2)));
  }
  return d;
}

Diagram copy(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexType c = random_colour(rng);
  const VertexId s = d.add_spider(c, Phase::exact(uniform(rng, 0, 1), 1));
  const VertexId v = d.add_spider(opposite_colour(c), random_phase(rng, o));
  d.add_edge(s, v);
  const int extra = uniform(rng, 0, 2);
  if (extra == 2 && coin(rng, 0.3)) {
    d.add_edge(v, blob(d, rng, o, 1), 2);
  } else {
    legs(d, v, extra, rng);
  }
  return d;
}

Diagram pi_commute(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexType c = random_colour(rng);
  const VertexId p = d.add_spider(c, Phase::pi());
  Phase a = random_phase(rng, o);
  while (a.is_pi()) a = random_phase(rng, o);
  const VertexId z = d.add_spider(opposite_colour(c), a);
  d.add_edge(coin(rng) ? d.add_input() : blob(d, rng, o, uniform(rng, 1, 2)), p);
  d.add_edge(p, z);
  d.add_edge(z, d.add_output());
  return d;
}

Diagram bialgebra(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexId z1 = d.add_spider(VertexType::Z);
  const VertexId x1 = d.add_spider(VertexType::X);
  const VertexId z2 = d.add_spider(VertexType::Z);
  const VertexId x2 = d.add_spider(VertexType::X);
  d.add_edge(z1, x1);
  d.add_edge(x1, z2);
  d.add_edge(z2, x2);
  d.add_edge(x2, z1);
  if (coin(rng, 0.3)) {
    // z1 and x1 share an outside neighbour
    const VertexId y = blob(d, rng, o, 1);
    d.add_edge(z1, y);
    d.add_edge(x1, y);
    legs(d, z2, 1, rng);
    legs(d, x2, 1, rng);
  } else {
    for (VertexId v : {z1, x1, z2, x2}) legs(d, v, 1, rng);
  }
  return d;
}

Diagram hopf(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexId a = d.add_spider(VertexType::Z, random_phase(rng, o));
  const VertexId b = d.add_spider(VertexType::X, random_phase(rng, o));
  d.add_edge(a, b, uniform(rng, 2, 4));
  legs(d, a, uniform(rng, 0, 3), rng);
  legs(d, b, uniform(rng, 0, 3), rng);
  return d;
}

Diagram y_convert(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexType c = random_colour(rng);
  const Phase s = Phase::exact(coin(rng) ? 1 : 3, 2);
  const VertexId p = d.add_spider(c, s);
  const VertexId z = d.add_spider(opposite_colour(c), random_phase(rng, o));
  const VertexId q = d.add_spider(c, -s);
  d.add_edge(coin(rng) ? d.add_input() : blob(d, rng, o, 1), p);
  d.add_edge(p, z);
  d.add_edge(z, q);
  d.add_edge(q, d.add_output());
  return d;
}

Diagram gadget_cancel(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexType hub = random_colour(rng), wire = opposite_colour(hub);
  const int n = uniform(rng, 1, 3);
  std::vector<VertexId> ws;
  for (int i = 0; i < n; ++i) {
    const VertexId w = d.add_spider(wire, random_phase(rng, o));
    d.add_edge(d.add_input(), w);
    d.add_edge(w, d.add_output());
    ws.push_back(w);
  }
  const Phase a = o.clifford_phases ? Phase::exact(uniform(rng, 0, 3), 2)
                                    : Phase::exact(uniform(rng, 0, 15), 8);
  for (const Phase& leaf_phase : {a, -a}) {
    const VertexId h = d.add_spider(hub);
    for (VertexId w : ws) d.add_edge(h, w);
    d.add_edge(h, d.add_spider(wire, leaf_phase));
  }
  return d;
}

Diagram recolor(Rng& rng, const InstanceOptions& o) {
  Diagram d;
  const VertexType c = random_colour(rng);
  const VertexId p = d.add_spider(c, random_phase(rng, o));
  const VertexId q = d.add_spider(opposite_colour(c), random_phase(rng, o));
  const VertexId r = d.add_spider(c, random_phase(rng, o));
  d.add_edge(d.add_input(), p);
  d.add_edge(p, q);
  d.add_edge(q, r);
  d.add_edge(r, coin(rng) ? d.add_output() : blob(d, rng, o, 1));
  return d;
}

}  // namespace zxkit::instances
