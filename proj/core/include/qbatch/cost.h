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

#ifndef QBATCH_COST_H
#define QBATCH_COST_H

#include <cstdint>
#include <span>
#include <vector>

#include "qbatch/circuit.h"
#include "qbatch/graph.h"
#include "qbatch/graphical_model.h"
#include "qbatch/ordering.h"

namespace qbatch {

struct CostStep {
  int rank;
  int vertex;
  int clique_size;
  std::uint64_t flops;         // 2 * L^clique_size
  std::uint64_t input_elems;   // sizes of every tensor in the bucket
  std::uint64_t output_elems;  // L^(clique_size - 1)

  /// Everything the step reads or writes.
  std::uint64_t storage_elems() const { return input_elems + output_elems; }

  bool operator==(const CostStep&) const = default;
};

/// Dry-run of bucket elimination. Memory is in complex elements. Peak
/// memory counts live intermediates only (factor inputs are streamed) and,
/// for a partial contraction, the merged result over the tail.
struct CostReport {
  std::uint64_t total_flops = 0;
  std::uint64_t peak_memory_elems = 0;
  std::uint64_t total_memory_elems = 0;  // elements written: step outputs + result
  std::uint64_t result_elems = 1;        // L^|tail|
  int treewidth = 0;
  std::vector<CostStep> per_step;

  /// Step with the most flops (first one on ties). Requires a non-empty report.
  const CostStep& dominant_step() const;
};

/// Symbolic bucket elimination over factor scopes. `tail` must be the last
/// |tail| vertices of `order` (any internal order); those ranks are not
/// eliminated. The treewidth covers the tail as one clique.
CostReport estimate(std::span<const std::vector<int>> scopes, const EliminationOrder& order,
                    const std::vector<int>& tail);

/// Scopes are the graph's edges; isolated vertices get empty buckets.
CostReport estimate(const Graph& graph, const EliminationOrder& order, const std::vector<int>& tail);

/// Scopes are the model's factors, the tail its free variables.
CostReport estimate(const GraphicalModel& model, const EliminationOrder& order);

struct FlopsPerMemory {
  std::vector<double> per_step;
  std::uint64_t flops = 0;
  std::uint64_t memory = 0;

  double aggregate() const { return static_cast<double>(flops) / static_cast<double>(memory); }
};

/// Flops per element written, per step (flops / output) and in aggregate
/// (total flops / total_memory_elems). Throws qbatch::Error when the report
/// has no steps.
FlopsPerMemory flops_per_memory(const CostReport& report);

struct TradeoffRow {
  int batch_size;
  int treewidth;
  std::uint64_t flops;
  std::uint64_t peak_memory;
  double flops_per_mem;
  /// 2^batch_size * single-amplitude flops: the cost of the same amplitudes
  /// evaluated one at a time.
  std::uint64_t repeated_single_flops;
};

/// One row per batch size; the batch is qubits 0..size-1, all other output
/// bits fixed to 0.
std::vector<TradeoffRow> batch_tradeoff_table(const Circuit& circuit,
                                              const std::vector<int>& batch_sizes,
                                              Heuristic heuristic = Heuristic::MinFill);

}  // namespace qbatch

#endif  // QBATCH_COST_H
