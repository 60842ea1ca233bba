// Copyright 2026 The qbatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "qbatch/qbatch.h"

namespace qbatch {
namespace {

GraphicalModel grid_model(int k, int d) {
  Circuit c = generate_random_circuit(k, d, 1);
  return build_model(c, std::string(c.n_qubits(), '0'));
}

void BM_GreedyOrder(benchmark::State& state) {
  GraphicalModel m = grid_model(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Heuristic h = state.range(2) ? Heuristic::MinDegree : Heuristic::MinFill;
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_order(m.graph(), h));
  }
  state.counters["vars"] = m.num_vars();
}
BENCHMARK(BM_GreedyOrder)->Args({4, 10, 0})->Args({4, 10, 1})->Args({5, 20, 0})->Args({6, 25, 0});

void BM_Pipeline(benchmark::State& state) {
  GraphicalModel m = grid_model(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(restricted_order_pipeline(m.graph(), m.free_vars(), Heuristic::MinFill));
  }
}
BENCHMARK(BM_Pipeline)->Args({4, 10})->Args({5, 20});

void BM_ExhaustiveOrder(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution edge(0.3);
  Graph g(static_cast<int>(state.range(0)));
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int v = u + 1; v < g.num_vertices(); ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_order(g));
  }
}
BENCHMARK(BM_ExhaustiveOrder)->DenseRange(8, kExhaustiveLimit, 2);

void BM_SimulateAmplitude(benchmark::State& state) {
  Circuit c = generate_random_circuit(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
  std::string bits(c.n_qubits(), '0');
  ContractionCounters counters;
  simulate_amplitude(c, bits, {Heuristic::MinFill, &counters});
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_amplitude(c, bits));
  }
  state.counters["flops"] = static_cast<double>(counters.total_flops);
}
BENCHMARK(BM_SimulateAmplitude)->Args({4, 10})->Args({5, 16})->Args({6, 20});

void BM_SimulateBatch(benchmark::State& state) {
  Circuit c = generate_random_circuit(5, 16, 1);
  int width = static_cast<int>(state.range(0));
  std::vector<int> batch;
  std::map<int, int> fixed;
  for (int q = 0; q < c.n_qubits(); ++q) {
    if (q < width) {
      batch.push_back(q);
    } else {
      fixed[q] = 0;
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_batch(c, batch, fixed));
  }
}
BENCHMARK(BM_SimulateBatch)->DenseRange(0, 6, 2);

void BM_Estimate(benchmark::State& state) {
  GraphicalModel m = grid_model(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  EliminationOrder order = restricted_order_pipeline(m.graph(), {}, Heuristic::MinFill).order;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate(m, order));
  }
}
BENCHMARK(BM_Estimate)->Args({4, 10})->Args({6, 25});

void BM_Oracle(benchmark::State& state) {
  Circuit c = generate_random_circuit(static_cast<int>(state.range(0)), 10, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(c));
  }
}
BENCHMARK(BM_Oracle)->Arg(3)->Arg(4);

}  // namespace
}  // namespace qbatch

BENCHMARK_MAIN();
