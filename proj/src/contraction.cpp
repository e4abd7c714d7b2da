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

#include "zxkit/contraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zxkit {

namespace {

// below this many result entries the OpenMP fork costs more than it saves
constexpr std::size_t kParallelThreshold = 1u << 12;

std::size_t position(const std::vector<WireLabel>& labels, WireLabel l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  return it == labels.end() ? labels.size() : std::size_t(it - labels.begin());
}

// Bit weight of label position i in a rank-k tensor.
std::size_t weight(std::size_t k, std::size_t i) {
  return std::size_t(1) << (k - 1 - i);
}

struct Split {
  std::vector<WireLabel> free_a, free_b, shared;
};

Split split_labels(const Tensor& a, const Tensor& b) {
  Split s;
  for (WireLabel l : a.labels) {
    if (position(b.labels, l) < b.rank())
      s.shared.push_back(l);
    else
      s.free_a.push_back(l);
  }
  for (WireLabel l : b.labels)
    if (position(a.labels, l) == a.rank()) s.free_b.push_back(l);
  return s;
}

}  // namespace

std::size_t contracted_rank(const Tensor& a, const Tensor& b) {
  std::size_t shared = 0;
  for (WireLabel l : a.labels)
    if (position(b.labels, l) < b.rank()) ++shared;
  return a.rank() + b.rank() - 2 * shared;
}

Tensor contract_pair(const Tensor& a, const Tensor& b) {
  Split s = split_labels(a, b);
  const std::size_t ka = a.rank(), kb = b.rank();
  const std::size_t nfa = s.free_a.size(), nfb = s.free_b.size();
  const std::size_t ns = s.shared.size();

  // weights of each free/shared bit inside a and b
  std::vector<std::size_t> wfa(nfa), wfb(nfb), wsa(ns), wsb(ns);
  for (std::size_t i = 0; i < nfa; ++i) wfa[i] = weight(ka, position(a.labels, s.free_a[i]));
  for (std::size_t i = 0; i < nfb; ++i) wfb[i] = weight(kb, position(b.labels, s.free_b[i]));
  for (std::size_t i = 0; i < ns; ++i) {
    wsa[i] = weight(ka, position(a.labels, s.shared[i]));
    wsb[i] = weight(kb, position(b.labels, s.shared[i]));
  }

  const std::size_t nsh = std::size_t(1) << ns;
  std::vector<std::size_t> off_a(nsh, 0), off_b(nsh, 0);
  for (std::size_t sh = 0; sh < nsh; ++sh)
    for (std::size_t i = 0; i < ns; ++i)
      if (sh & weight(ns, i)) {
        off_a[sh] += wsa[i];
        off_b[sh] += wsb[i];
      }

  Tensor out;
  out.labels = s.free_a;
  out.labels.insert(out.labels.end(), s.free_b.begin(), s.free_b.end());
  const std::size_t nout = std::size_t(1) << out.rank();
  out.data.assign(nout, Complex(0, 0));

  const Complex* da = a.data.data();
  const Complex* db = b.data.data();
  Complex* dout = out.data.data();
  const auto total = static_cast<long long>(nout);

#pragma omp parallel for schedule(static) if (nout >= kParallelThreshold)
  for (long long idx = 0; idx < total; ++idx) {
    auto r = static_cast<std::size_t>(idx);
    std::size_t base_a = 0, base_b = 0;
    for (std::size_t i = 0; i < nfb; ++i)
      if (r & weight(nfb, i)) base_b += wfb[i];
    std::size_t ra = r >> nfb;
    for (std::size_t i = 0; i < nfa; ++i)
      if (ra & weight(nfa, i)) base_a += wfa[i];
    Complex acc(0, 0);
    for (std::size_t sh = 0; sh < nsh; ++sh)
      acc += da[base_a + off_a[sh]] * db[base_b + off_b[sh]];
    dout[r] = acc;
  }
  return out;
}

Tensor contract_pair_reference(const Tensor& a, const Tensor& b) {
  Split s = split_labels(a, b);
  Tensor out;
  out.labels = s.free_a;
  out.labels.insert(out.labels.end(), s.free_b.begin(), s.free_b.end());
  const std::size_t nout = std::size_t(1) << out.rank();
  const std::size_t nsh = std::size_t(1) << s.shared.size();
  out.data.assign(nout, Complex(0, 0));

  auto index_of = [](const Tensor& t, const std::map<WireLabel, int>& bits) {
    std::size_t idx = 0;
    for (WireLabel l : t.labels) idx = (idx << 1) | std::size_t(bits.at(l));
    return idx;
  };

  for (std::size_t r = 0; r < nout; ++r) {
    std::map<WireLabel, int> bits;
    for (std::size_t i = 0; i < out.rank(); ++i)
      bits[out.labels[i]] = int((r >> (out.rank() - 1 - i)) & 1);
    Complex acc(0, 0);
    for (std::size_t sh = 0; sh < nsh; ++sh) {
      for (std::size_t i = 0; i < s.shared.size(); ++i)
        bits[s.shared[i]] = int((sh >> (s.shared.size() - 1 - i)) & 1);
      acc += a.data[index_of(a, bits)] * b.data[index_of(b, bits)];
    }
    out.data[r] = acc;
  }
  return out;
}

Tensor trace_repeated(const Tensor& t) {
  std::map<WireLabel, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < t.rank(); ++i) where[t.labels[i]].push_back(i);

  std::vector<std::size_t> keep;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < t.rank(); ++i) {
    const auto& pos = where.at(t.labels[i]);
    if (pos.size() == 1) {
      keep.push_back(i);
    } else if (pos.size() == 2) {
      if (pos[0] == i) pairs.emplace_back(pos[0], pos[1]);
    } else {
      throw std::logic_error("wire label used more than twice in one tensor");
    }
  }
  if (pairs.empty()) return t;

  Tensor out;
  for (std::size_t i : keep) out.labels.push_back(t.labels[i]);
  const std::size_t k = t.rank();
  const std::size_t nout = std::size_t(1) << keep.size();
  const std::size_t np = std::size_t(1) << pairs.size();
  out.data.assign(nout, Complex(0, 0));
  for (std::size_t r = 0; r < nout; ++r) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if ((r >> (keep.size() - 1 - i)) & 1) base |= weight(k, keep[i]);
    Complex acc(0, 0);
    for (std::size_t p = 0; p < np; ++p) {
      std::size_t idx = base;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((p >> i) & 1) idx |= weight(k, pairs[i].first) | weight(k, pairs[i].second);
      acc += t.data[idx];
    }
    out.data[r] = acc;
  }
  return out;
}

}  // namespace zxkit
