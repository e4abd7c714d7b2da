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

// Pairwise contraction: OpenMP kernel against the serial reference, plus
// whole-diagram evaluation with either kernel.

#include <random>

#include <benchmark/benchmark.h>

#include "zxkit/circuit.hpp"
#include "zxkit/contraction.hpp"
#include "zxkit/semantics.hpp"

namespace {

using namespace zxkit;

/// Rank-r tensors sharing `shared` labels; the result has rank 2r - 2 shared.
std::pair<Tensor, Tensor> make_pair(std::size_t rank, std::size_t shared) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> n;
  Tensor a, b;
  for (std::size_t i = 0; i < rank; ++i) a.labels.push_back(static_cast<WireLabel>(i));
  for (std::size_t i = 0; i < rank; ++i)
    b.labels.push_back(static_cast<WireLabel>(i < shared ? i : rank + i));
  for (Tensor* t : {&a, &b}) {
    t->data.resize(std::size_t{1} << rank);
    for (Complex& c : t->data) c = {n(rng), n(rng)};
  }
  return {a, b};
}

void BM_ContractParallel(benchmark::State& state) {
  const auto [a, b] = make_pair(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(contract_pair(a, b));
}

void BM_ContractReference(benchmark::State& state) {
  const auto [a, b] = make_pair(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(contract_pair_reference(a, b));
}

BENCHMARK(BM_ContractParallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ContractReference)->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond);

Circuit ladder(std::size_t width, std::size_t depth) {
  Circuit c;
  c.width = width;
  for (std::size_t d = 0; d < depth; ++d)
    for (std::size_t q = 0; q + 1 < width; ++q) {
      c.gates.push_back(Gate::single(GateKind::H, q));
      c.gates.push_back(Gate::cnot(q, q + 1));
      c.gates.push_back(Gate::single(GateKind::T, q + 1));
    }
  return c;
}

void BM_Eval(benchmark::State& state) {
  const Diagram d = to_diagram(ladder(6, 6));
  EvalOptions o;
  o.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(eval(d, o));
}

BENCHMARK(BM_Eval)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
