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

#include "zxkit/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "zxkit/contraction.hpp"
#include "zxkit/errors.hpp"

namespace zxkit {

namespace {

Tensor vertex_tensor(const Vertex& v, std::vector<WireLabel> labels) {
  Tensor t;
  const std::size_t k = labels.size();
  t.labels = std::move(labels);
  const std::size_t n = std::size_t(1) << k;
  t.data.assign(n, Complex(0, 0));
  switch (v.type) {
    case VertexType::Z: {
      Complex e = Scalar::phase(v.phase).value;
      t.data[0] += 1.0;
      t.data[n - 1] += e;
      break;
    }
    case VertexType::X: {
      Complex e = Scalar::phase(v.phase).value;
      double norm = std::pow(std::numbers::sqrt2, -static_cast<double>(k));
      for (std::size_t b = 0; b < n; ++b) {
        double sign = (std::popcount(b) % 2 == 0) ? 1.0 : -1.0;
        t.data[b] = norm * (1.0 + sign * e);
      }
      break;
    }
    case VertexType::H: {
      if (k != 2) throw IllFormed("H-box without exactly two legs");
      const double s = 1.0 / std::numbers::sqrt2;
      t.data = {s, s, s, -s};
      break;
    }
    case VertexType::Boundary:
      throw std::logic_error("boundaries have no tensor");
  }
  return t;
}

struct Network {
  std::vector<std::optional<Tensor>> tensors;
  std::map<WireLabel, std::vector<std::size_t>> owners;

  std::size_t add(Tensor t) {
    std::size_t id = tensors.size();
    for (WireLabel l : t.labels) owners[l].push_back(id);
    tensors.emplace_back(std::move(t));
    return id;
  }

  void retire(std::size_t id) {
    for (WireLabel l : tensors[id]->labels) std::erase(owners[l], id);
    tensors[id].reset();
  }
};

Tensor contract_checked(const Tensor& a, const Tensor& b, const EvalOptions& opts) {
  std::size_t r = contracted_rank(a, b);
  if (r > opts.max_width)
    throw TooLarge("intermediate tensor of rank " + std::to_string(r) +
                   " exceeds width cap " + std::to_string(opts.max_width));
  return opts.parallel ? contract_pair(a, b) : contract_pair_reference(a, b);
}

}  // namespace

Matrix eval(const Diagram& d, const EvalOptions& opts) {
  d.validate();
  const std::size_t nin = d.inputs().size(), nout = d.outputs().size();
  if (nin + nout > opts.max_legs)
    throw TooLarge("diagram has " + std::to_string(nin + nout) +
                   " boundary legs, budget is " + std::to_string(opts.max_legs));
  const auto rows = static_cast<Eigen::Index>(std::size_t(1) << nout);
  const auto cols = static_cast<Eigen::Index>(std::size_t(1) << nin);
  if (d.scalar().is_zero()) return Matrix::Zero(rows, cols);

  // one label per edge instance; a self-loop puts its label on v twice
  std::map<VertexId, std::vector<WireLabel>> legs;
  WireLabel next = 0;
  for (const auto& e : d.edges()) {
    for (unsigned k = 0; k < e.mult; ++k) {
      legs[e.a].push_back(next);
      legs[e.b].push_back(next);
      ++next;
    }
  }

  Network net;
  for (const auto& [v, data] : d.vertices()) {
    if (data.type == VertexType::Boundary) continue;
    net.add(trace_repeated(vertex_tensor(data, legs[v])));
  }

  std::mt19937_64 rng(opts.order_seed.value_or(0));
  for (;;) {
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (const auto& [l, ids] : net.owners)
      if (ids.size() == 2)
        candidates.emplace_back(std::min(ids[0], ids[1]), std::max(ids[0], ids[1]));
    if (candidates.empty()) break;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::pair<std::size_t, std::size_t> pick;
    if (opts.order_seed) {
      std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
      pick = candidates[dist(rng)];
    } else {
      std::size_t best = SIZE_MAX;
      for (const auto& c : candidates) {
        std::size_t r = contracted_rank(*net.tensors[c.first], *net.tensors[c.second]);
        if (r < best) {
          best = r;
          pick = c;
        }
      }
    }
    Tensor t = contract_checked(*net.tensors[pick.first], *net.tensors[pick.second], opts);
    net.retire(pick.first);
    net.retire(pick.second);
    net.add(std::move(t));
  }

  // disconnected pieces: outer products, smallest first
  std::vector<Tensor> rest;
  for (auto& t : net.tensors)
    if (t) rest.push_back(std::move(*t));
  std::stable_sort(rest.begin(), rest.end(), [](const Tensor& a, const Tensor& b) {
    return a.rank() < b.rank();
  });
  Tensor total;
  total.data = {Complex(1, 0)};
  for (const auto& t : rest) total = contract_checked(total, t, opts);

  // boundary position -> label; two boundaries joined by a bare wire share one
  std::vector<WireLabel> out_labels, in_labels;
  for (VertexId b : d.outputs()) out_labels.push_back(legs.at(b).at(0));
  for (VertexId b : d.inputs()) in_labels.push_back(legs.at(b).at(0));
  std::map<WireLabel, std::size_t> pos_in_total;
  for (std::size_t i = 0; i < total.rank(); ++i) pos_in_total[total.labels[i]] = i;

  const Complex s = d.scalar().value;
  Matrix m = Matrix::Zero(rows, cols);
  std::map<WireLabel, int> bits;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      bits.clear();
      bool consistent = true;
      auto assign = [&](const std::vector<WireLabel>& labels, std::size_t value) {
        const std::size_t k = labels.size();
        for (std::size_t i = 0; i < k && consistent; ++i) {
          int bit = int((value >> (k - 1 - i)) & 1);
          auto [it, fresh] = bits.emplace(labels[i], bit);
          if (!fresh && it->second != bit) consistent = false;
        }
      };
      assign(out_labels, static_cast<std::size_t>(r));
      assign(in_labels, static_cast<std::size_t>(c));
      if (!consistent) continue;
      std::size_t idx = 0;
      for (std::size_t i = 0; i < total.rank(); ++i)
        idx = (idx << 1) | std::size_t(bits.at(total.labels[i]));
      m(r, c) = s * total.data[idx];
    }
  }
  return m;
}

Matrix hadamard_matrix() {
  Matrix h(2, 2);
  const double s = 1.0 / std::numbers::sqrt2;
  h << s, s, s, -s;
  return h;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix spider_matrix(VertexType type, const Phase& phase, std::size_t m, std::size_t n) {
  if (!is_spider_type(type)) throw IllFormed("spider_matrix needs Z or X");
  const auto rows = static_cast<Eigen::Index>(std::size_t(1) << n);
  const auto cols = static_cast<Eigen::Index>(std::size_t(1) << m);
  Matrix z = Matrix::Zero(rows, cols);
  z(0, 0) += 1.0;
  z(rows - 1, cols - 1) += Scalar::phase(phase).value;
  if (type == VertexType::Z) return z;
  Matrix hn = Matrix::Identity(1, 1), hm = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < n; ++i) hn = kron(hn, hadamard_matrix());
  for (std::size_t i = 0; i < m; ++i) hm = kron(hm, hadamard_matrix());
  return hn * z * hm;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrices have different shapes");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Matrix id = Matrix::Identity(m.rows(), m.cols());
  return max_abs_diff(m.adjoint() * m, id) <= tol;
}

ScalarWitness equal_up_to_scalar(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrices have different shapes");
  Eigen::Index br = 0, bc = 0;
  double best = -1.0;
  for (Eigen::Index r = 0; r < b.rows(); ++r)
    for (Eigen::Index c = 0; c < b.cols(); ++c)
      if (std::abs(b(r, c)) > best) {
        best = std::abs(b(r, c));
        br = r;
        bc = c;
      }
  const double amax = a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
  if (best <= tol) return {amax <= tol, std::nullopt};
  Complex c = a(br, bc) / b(br, bc);
  if (std::abs(c) <= tol) return {false, c};
  return {max_abs_diff(a, c * b) <= tol, c};
}

}  // namespace zxkit
