// Copyright 2026 The qmaxcut Authors
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

#include <benchmark/benchmark.h>

#include "qmaxcut/solver.hpp"
#include "qmaxcut/sparse_statevector.hpp"
#include "qmaxcut/statevector.hpp"
#include "qmaxcut/synthesis.hpp"

using namespace qmaxcut;

namespace {

const Graph& example_graph() {
  static const Graph g(3, {Edge{1, 2}, Edge{2, 3}});
  return g;
}

void BM_HadamardKernel(benchmark::State& state) {
  const auto qubits = static_cast<std::uint32_t>(state.range(0));
  StateVector sv(qubits);
  for (auto _ : state) {
    sv.apply(Gate::h(qubits / 2));
    benchmark::DoNotOptimize(sv);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(sv.dimension()));
}
BENCHMARK(BM_HadamardKernel)->Arg(16)->Arg(20)->Arg(24);

void BM_ToffoliKernel(benchmark::State& state) {
  const auto qubits = static_cast<std::uint32_t>(state.range(0));
  StateVector sv(qubits);
  sv.apply(Gate::h(0));
  sv.apply(Gate::h(1));
  for (auto _ : state) {
    sv.apply(Gate::toffoli(0, 1, qubits - 1));
    benchmark::DoNotOptimize(sv);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(sv.dimension()));
}
BENCHMARK(BM_ToffoliKernel)->Arg(16)->Arg(20)->Arg(24);

void BM_MczKernel(benchmark::State& state) {
  const auto qubits = static_cast<std::uint32_t>(state.range(0));
  StateVector sv(qubits);
  for (auto _ : state) {
    sv.apply(Gate::mcz({0, 1}, qubits - 1));
    benchmark::DoNotOptimize(sv);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(sv.dimension()));
}
BENCHMARK(BM_MczKernel)->Arg(16)->Arg(20)->Arg(24);

void BM_CountingBlockDense(benchmark::State& state) {
  const QubitLayout layout = QubitLayout::compact(3, 2);
  const Circuit block = synth_counting_block(example_graph(), layout);
  StateVector sv = init_state(layout);
  apply_hadamard_layer(sv, layout);
  for (auto _ : state) {
    sv.apply(block);
    sv.apply(block.inverse());
    benchmark::DoNotOptimize(sv);
  }
}
BENCHMARK(BM_CountingBlockDense);

void BM_GroverIterationDense(benchmark::State& state) {
  const QubitLayout layout = QubitLayout::compact(3, 2);
  const Circuit iteration = synth_grover_iteration(example_graph(), layout, 2);
  StateVector sv = init_state(layout);
  apply_hadamard_layer(sv, layout);
  for (auto _ : state) {
    sv.apply(iteration);
    benchmark::DoNotOptimize(sv);
  }
}
BENCHMARK(BM_GroverIterationDense);

void BM_GroverIterationSparse(benchmark::State& state) {
  // 39-qubit compact layout: far past any dense budget, bounded support.
  const Graph g(5, {Edge{1, 2}, Edge{2, 3}, Edge{3, 4}, Edge{4, 5},
                    Edge{5, 1}, Edge{1, 3}});
  const QubitLayout layout = QubitLayout::compact(g.n(), g.m());
  const Circuit iteration = synth_grover_iteration(g, layout, 4);
  SparseStateVector sv = sparse_init_state(layout);
  apply_hadamard_layer(sv, layout);
  for (auto _ : state) {
    sv.apply(iteration);
    benchmark::DoNotOptimize(sv);
  }
}
BENCHMARK(BM_GroverIterationSparse);

void BM_SolveExample(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_maxcut(example_graph()));
  }
}
BENCHMARK(BM_SolveExample);

void BM_BruteForce(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::vector<Edge> edges;
  for (std::uint32_t v = 1; v < n; ++v) edges.push_back(Edge{v, v + 1});
  const Graph g(n, std::move(edges));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_max_cut(g));
  }
}
BENCHMARK(BM_BruteForce)->Arg(12)->Arg(16)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
