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

#include "zxkit/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace zxkit {

namespace {

constexpr std::size_t kLeafBudget = 4096;

std::string hex_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

class Canoniser {
 public:
  explicit Canoniser(const Diagram& d) : d_(d) {
    for (const auto& [v, data] : d.vertices()) ids_.push_back(v);
    for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = i;
    nbrs_.resize(ids_.size());
    loops_.assign(ids_.size(), 0);
    for (std::size_t i = 0; i < ids_.size(); ++i)
      for (const auto& [w, m] : d.neighbours(ids_[i])) {
        if (w == ids_[i])
          loops_[i] = m;
        else
          nbrs_[i].emplace_back(index_.at(w), m);
      }
    std::vector<std::string> labels(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      const Vertex& v = d.vertex(ids_[i]);
      std::string l = to_string(v.type) + "|" + v.phase.to_string() + "|" +
                      std::to_string(loops_[i]);
      labels[i] = l;
    }
    for (std::size_t k = 0; k < d.inputs().size(); ++k)
      labels[index_.at(d.inputs()[k])] += "|in" + std::to_string(k);
    for (std::size_t k = 0; k < d.outputs().size(); ++k)
      labels[index_.at(d.outputs()[k])] += "|out" + std::to_string(k);
    base_labels_ = labels;
  }

  std::string run() {
    std::vector<std::size_t> colour = rank(base_labels_);
    colour = refine(colour);
    std::optional<std::string> best;
    search(colour, best);
    if (leaves_ > kLeafBudget || !best) return "wl:" + invariant_of(colour);
    return *best;
  }

 private:
  template <typename T>
  static std::vector<std::size_t> rank(const std::vector<T>& keys) {
    std::vector<T> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i)
      out[i] = std::size_t(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                           sorted.begin());
    return out;
  }

  static std::size_t count_colours(const std::vector<std::size_t>& c) {
    std::vector<std::size_t> s = c;
    std::sort(s.begin(), s.end());
    return std::size_t(std::unique(s.begin(), s.end()) - s.begin());
  }

  std::vector<std::size_t> refine(std::vector<std::size_t> colour) const {
    using Sig = std::pair<std::size_t, std::vector<std::pair<std::size_t, unsigned>>>;
    std::size_t ncol = count_colours(colour);
    for (;;) {
      std::vector<Sig> sigs(colour.size());
      for (std::size_t i = 0; i < colour.size(); ++i) {
        sigs[i].first = colour[i];
        for (const auto& [j, m] : nbrs_[i]) sigs[i].second.emplace_back(colour[j], m);
        std::sort(sigs[i].second.begin(), sigs[i].second.end());
      }
      std::vector<std::size_t> next = rank(sigs);
      std::size_t n = count_colours(next);
      if (n == ncol) return next;
      colour = std::move(next);
      ncol = n;
    }
  }

  void search(const std::vector<std::size_t>& colour, std::optional<std::string>& best) {
    if (leaves_ > kLeafBudget) return;
    // first colour class with more than one member
    std::map<std::size_t, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < colour.size(); ++i) cells[colour[i]].push_back(i);
    const std::vector<std::size_t>* cell = nullptr;
    for (const auto& [c, members] : cells)
      if (members.size() > 1) {
        cell = &members;
        break;
      }
    if (!cell) {
      ++leaves_;
      std::string s = leaf_form(colour);
      if (!best || s < *best) best = std::move(s);
      return;
    }
    for (std::size_t v : *cell) {
      std::vector<std::pair<std::size_t, int>> keys(colour.size());
      for (std::size_t i = 0; i < colour.size(); ++i) keys[i] = {colour[i], i == v ? 0 : 1};
      search(refine(rank(keys)), best);
      if (leaves_ > kLeafBudget) return;
    }
  }

  std::string leaf_form(const std::vector<std::size_t>& colour) const {
    std::ostringstream os;
    std::vector<std::size_t> order(colour.size());
    for (std::size_t i = 0; i < colour.size(); ++i) order[colour[i]] = i;
    os << "v";
    for (std::size_t i : order) os << "[" << base_labels_[i] << "]";
    std::vector<std::tuple<std::size_t, std::size_t, unsigned>> edges;
    for (std::size_t i = 0; i < colour.size(); ++i)
      for (const auto& [j, m] : nbrs_[i])
        if (colour[i] < colour[j]) edges.emplace_back(colour[i], colour[j], m);
    std::sort(edges.begin(), edges.end());
    os << "e";
    for (const auto& [a, b, m] : edges) os << "(" << a << "," << b << "," << m << ")";
    os << tail();
    return os.str();
  }

  std::string invariant_of(const std::vector<std::size_t>& colour) const {
    std::ostringstream os;
    std::vector<std::pair<std::size_t, std::string>> v;
    for (std::size_t i = 0; i < colour.size(); ++i) v.emplace_back(colour[i], base_labels_[i]);
    std::sort(v.begin(), v.end());
    for (const auto& [c, l] : v) os << "[" << c << ":" << l << "]";
    std::vector<std::tuple<std::size_t, std::size_t, unsigned>> edges;
    for (std::size_t i = 0; i < colour.size(); ++i)
      for (const auto& [j, m] : nbrs_[i])
        if (colour[i] <= colour[j]) edges.emplace_back(colour[i], colour[j], m);
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b, m] : edges) os << "(" << a << "," << b << "," << m << ")";
    os << tail();
    return os.str();
  }

  std::string tail() const {
    return "s(" + hex_double(d_.scalar().value.real()) + "," +
           hex_double(d_.scalar().value.imag()) + ")";
  }

  const Diagram& d_;
  std::vector<VertexId> ids_;
  std::map<VertexId, std::size_t> index_;
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> nbrs_;
  std::vector<unsigned> loops_;
  std::vector<std::string> base_labels_;
  std::size_t leaves_ = 0;
};

}  // namespace

std::string canonical_form(const Diagram& d) { return Canoniser(d).run(); }

std::string canonical_hash(const Diagram& d) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical_form(d)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace zxkit
