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

#include "qbatch/cost.h"

#include <gtest/gtest.h>

#include <bit>

#include "qbatch/contraction.h"
#include "qbatch/error.h"
#include "test_util.h"

namespace qbatch {
namespace {

using namespace testing;

std::map<int, int> zeros_except(int n, int batch) {
  std::map<int, int> fixed;
  for (int q = batch; q < n; ++q) fixed[q] = 0;
  return fixed;
}

std::vector<int> first_qubits(int c) {
  std::vector<int> out(c);
  for (int q = 0; q < c; ++q) out[q] = q;
  return out;
}

TEST(Estimate, PairContraction) {
  // A_ijl B_jkl summed over l, result over i, j, k
  std::vector<std::vector<int>> scopes{{0, 1, 3}, {1, 2, 3}};
  CostReport r = estimate(scopes, EliminationOrder({3, 0, 1, 2}), {0, 1, 2});
  ASSERT_EQ(r.per_step.size(), 1u);
  const CostStep& s = r.per_step[0];
  EXPECT_EQ(s.clique_size, 4);
  EXPECT_EQ(s.flops, 2u * 16u);  // L^4 multiplications and L^4 additions
  EXPECT_EQ(s.storage_elems(), 3u * 8u);
  EXPECT_EQ(s.output_elems, 8u);
  EXPECT_EQ(r.total_flops, 32u);
  EXPECT_EQ(r.result_elems, 8u);
  EXPECT_EQ(r.treewidth, 3);
}

TEST(Estimate, SixNodeSteps) {
  CostReport r = estimate(six_node_scopes(), EliminationOrder({kI, kJ, kK, kL, kM, kN}), {});
  std::vector<std::uint64_t> flops, outputs;
  for (const CostStep& s : r.per_step) {
    flops.push_back(s.flops);
    outputs.push_back(s.output_elems);
  }
  EXPECT_EQ(flops, (std::vector<std::uint64_t>{32, 16, 16, 16, 8, 4}));
  EXPECT_EQ(outputs, (std::vector<std::uint64_t>{8, 4, 4, 4, 2, 1}));
  EXPECT_EQ(r.treewidth, 3);
  EXPECT_EQ(r.dominant_step().rank, 1);
  EXPECT_EQ(r.total_flops, 92u);
  EXPECT_EQ(estimate(six_node_graph(), EliminationOrder({kI, kJ, kK, kL, kM, kN}), {}).treewidth, 3);
}

TEST(Estimate, SingleVertex) {
  CostReport r = estimate(Graph(1), EliminationOrder({0}), {});
  ASSERT_EQ(r.per_step.size(), 1u);
  EXPECT_EQ(r.total_flops, 4u);
  EXPECT_EQ(r.per_step[0].output_elems, 1u);
  EXPECT_EQ(r.treewidth, 0);
}

TEST(Estimate, TailMustBeSuffix) {
  EXPECT_THROW(estimate(six_node_graph(), EliminationOrder({kI, kJ, kK, kL, kM, kN}), {kI}), Error);
  EXPECT_NO_THROW(estimate(six_node_graph(), EliminationOrder({kI, kJ, kK, kL, kM, kN}), {kN, kM}));
}

TEST(Estimate, Invariants) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Circuit c = generate_random_circuit(3, 8, seed);
    GraphicalModel m = build_model(c, {1, 2}, {{0, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 1}, {7, 0}, {8, 0}});
    RestrictedOrder plan = restricted_order_pipeline(m.graph(), m.free_vars(), Heuristic::MinFill);
    CostReport r = estimate(m, plan.order);
    std::uint64_t sum = 0, biggest = 0;
    int max_clique = 0;
    for (const CostStep& s : r.per_step) {
      sum += s.flops;
      biggest = std::max(biggest, s.output_elems);
      max_clique = std::max(max_clique, s.clique_size);
    }
    EXPECT_EQ(sum, r.total_flops);
    EXPECT_GE(r.peak_memory_elems, biggest);
    EXPECT_EQ(r.treewidth, plan.treewidth);
    EXPECT_LE(max_clique - 1, r.treewidth);
    EXPECT_EQ(r.per_step.size(), static_cast<std::size_t>(m.num_vars() - 2));
  }
}

TEST(Estimate, MatchesEngineCounters) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = generate_random_circuit(2 + trial % 3, 3 + trial % 8, rng());
    int batch = trial % 4;
    GraphicalModel m = build_model(c, first_qubits(batch), zeros_except(c.n_qubits(), batch));
    Heuristic h = trial % 2 ? Heuristic::MinDegree : Heuristic::MinFill;
    ContractionCounters counters;
    contract_model(m, {h, &counters});
    RestrictedOrder plan = restricted_order_pipeline(m.graph(), m.free_vars(), h);
    CostReport r = estimate(m, plan.order);
    EXPECT_EQ(r.total_flops, counters.total_flops);
    EXPECT_EQ(r.total_memory_elems, counters.allocated_elems);
    EXPECT_EQ(r.peak_memory_elems, counters.peak_live_elems);
    ASSERT_EQ(r.per_step.size(), counters.steps.size());
    for (std::size_t i = 0; i < r.per_step.size(); ++i) {
      const CostStep& e = r.per_step[i];
      const StepRecord& s = counters.steps[i];
      EXPECT_EQ(e.vertex, s.vertex);
      EXPECT_EQ(e.clique_size, s.clique_size);
      EXPECT_EQ(e.flops, s.flops);
      EXPECT_EQ(e.input_elems, s.input_elems);
      EXPECT_EQ(e.output_elems, s.output_elems);
    }
  }
}

TEST(Estimate, DominantStepScaling) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Circuit c = generate_random_circuit(3, 6 + static_cast<int>(seed), seed);
    GraphicalModel m = build_model(c, std::string(9, '0'));
    RestrictedOrder plan = restricted_order_pipeline(m.graph(), {}, Heuristic::MinFill);
    CostReport r = estimate(m, plan.order);
    EXPECT_EQ(std::bit_width(r.dominant_step().flops) - 1, r.treewidth + 2);
    EXPECT_TRUE(std::has_single_bit(r.dominant_step().flops));
  }
}

TEST(FlopsPerMemory, Bounds) {
  CostReport single = estimate(Graph(1), EliminationOrder({0}), {});
  EXPECT_DOUBLE_EQ(flops_per_memory(single).aggregate(), 4.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Circuit c = generate_random_circuit(3, 8, seed);
    GraphicalModel m = build_model(c, std::string(9, '0'));
    CostReport r = estimate(m, restricted_order_pipeline(m.graph(), {}, Heuristic::MinFill).order);
    FlopsPerMemory f = flops_per_memory(r);
    ASSERT_EQ(f.per_step.size(), r.per_step.size());
    for (double x : f.per_step) EXPECT_LE(x, 4.0);
    EXPECT_GE(f.aggregate(), 1.0);
    EXPECT_LE(f.aggregate(), 4.0);
  }
  EXPECT_THROW(flops_per_memory(CostReport{}), Error);
}

TEST(TradeoffTable, Rows) {
  Circuit c = generate_random_circuit(4, 10, 1);
  std::vector<TradeoffRow> rows = batch_tradeoff_table(c, {0, 1, 2, 3, 4});
  ASSERT_EQ(rows.size(), 5u);
  GraphicalModel single = build_model(c, std::string(16, '0'));
  CostReport base = estimate(single, restricted_order_pipeline(single.graph(), {}, Heuristic::MinFill).order);
  EXPECT_EQ(rows[0].flops, base.total_flops);
  EXPECT_EQ(rows[0].treewidth, base.treewidth);
  // pinned regression values
  EXPECT_EQ(rows[0].treewidth, 4);
  EXPECT_EQ(rows[0].flops, 852u);
  EXPECT_EQ(rows[3].flops, 984u);
  EXPECT_LT(rows[3].flops, 8 * rows[0].flops);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(rows[i].batch_size, i);
    EXPECT_EQ(rows[i].repeated_single_flops, base.total_flops << i);
  }
}

TEST(TradeoffTable, AllQubitsFree) {
  Circuit c = bell_like();
  std::vector<TradeoffRow> rows = batch_tradeoff_table(c, {2});
  GraphicalModel m = build_model(c, {0, 1}, {});
  CostReport r = estimate(m, restricted_order_pipeline(m.graph(), m.free_vars(), Heuristic::MinFill).order);
  EXPECT_EQ(rows[0].flops, r.total_flops);
  EXPECT_EQ(rows[0].peak_memory, r.peak_memory_elems);
  EXPECT_DOUBLE_EQ(rows[0].flops_per_mem, flops_per_memory(r).aggregate());
}

TEST(GeneratedCircuit, MinFillTreewidthPin) {
  Circuit c = generate_random_circuit(4, 10, 1);
  GraphicalModel m = build_model(c, std::string(16, '0'));
  EXPECT_EQ(m.num_vars(), 46);
  EXPECT_GE(treewidth_of_order(m.graph(), greedy_order(m.graph(), Heuristic::MinFill)), 4);
}

}  // namespace
}  // namespace qbatch
