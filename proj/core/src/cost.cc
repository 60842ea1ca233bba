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

#include <algorithm>
#include <map>

#include "qbatch/error.h"
#include "qbatch/tensor.h"

namespace qbatch {

namespace {

// Largest exponent whose element count and 2x flop count fit in 64 bits.
constexpr int kMaxExponent = 61;

std::uint64_t elems(int n_vars) {
  if (n_vars > kMaxExponent) {
    throw Error("tensor of rank " + std::to_string(n_vars) + " overflows the cost counters");
  }
  std::uint64_t out = 1;
  for (int i = 0; i < n_vars; ++i) {
    out *= kIndexDim;
  }
  return out;
}

struct SymbolicTensor {
  std::vector<int> scope;  // sorted
  bool intermediate;
};

void check_tail_is_suffix(const EliminationOrder& order, const std::vector<int>& tail) {
  const int n = order.size();
  const int c = static_cast<int>(tail.size());
  if (c > n) {
    throw Error("tail is larger than the order");
  }
  std::vector<int> suffix;
  for (int r = n - c + 1; r <= n; ++r) {
    suffix.push_back(order.vertex_at(r));
  }
  std::vector<int> sorted_tail = tail;
  std::sort(suffix.begin(), suffix.end());
  std::sort(sorted_tail.begin(), sorted_tail.end());
  if (suffix != sorted_tail) {
    throw Error("tail vertices are not at the end of the order");
  }
}

}  // namespace

const CostStep& CostReport::dominant_step() const {
  if (per_step.empty()) {
    throw Error("cost report has no steps");
  }
  return *std::max_element(per_step.begin(), per_step.end(),
                           [](const CostStep& a, const CostStep& b) { return a.flops < b.flops; });
}

CostReport estimate(std::span<const std::vector<int>> scopes, const EliminationOrder& order,
                    const std::vector<int>& tail) {
  check_tail_is_suffix(order, tail);
  const int n = order.size();
  std::vector<std::vector<SymbolicTensor>> buckets(n + 1);

  auto lowest_rank = [&](const std::vector<int>& scope) {
    int best = n + 1;
    for (int v : scope) {
      if (v < 0 || v >= n) {
        throw Error("scope variable " + std::to_string(v) + " has no rank in the order");
      }
      best = std::min(best, order.rank_of(v));
    }
    return best;
  };

  for (const auto& scope : scopes) {
    if (scope.empty()) {
      throw Error("empty factor scope");
    }
    std::vector<int> sorted = scope;
    std::sort(sorted.begin(), sorted.end());
    buckets[lowest_rank(sorted)].push_back({std::move(sorted), false});
  }

  CostReport report;
  const int stop = n - static_cast<int>(tail.size());
  std::uint64_t live = 0;
  int max_clique = 0;
  for (int i = 1; i <= stop; ++i) {
    const int v = order.vertex_at(i);
    std::vector<int> joint{v};
    std::uint64_t input = 0;
    std::uint64_t consumed = 0;
    for (const SymbolicTensor& t : buckets[i]) {
      joint.insert(joint.end(), t.scope.begin(), t.scope.end());
      input += elems(static_cast<int>(t.scope.size()));
      if (t.intermediate) {
        consumed += elems(static_cast<int>(t.scope.size()));
      }
    }
    buckets[i].clear();
    std::sort(joint.begin(), joint.end());
    joint.erase(std::unique(joint.begin(), joint.end()), joint.end());

    const int clique = static_cast<int>(joint.size());
    const std::uint64_t out = elems(clique - 1);
    const std::uint64_t flops = 2 * elems(clique);
    report.per_step.push_back({i, v, clique, flops, input, out});
    report.total_flops += flops;
    report.total_memory_elems += out;
    report.peak_memory_elems = std::max(report.peak_memory_elems, live + out);
    max_clique = std::max(max_clique, clique);
    live -= consumed;

    joint.erase(std::find(joint.begin(), joint.end(), v));
    if (!joint.empty()) {
      live += out;
      buckets[lowest_rank(joint)].push_back({std::move(joint), true});
    }
  }

  if (!tail.empty()) {
    report.result_elems = elems(static_cast<int>(tail.size()));
    report.total_memory_elems += report.result_elems;
    report.peak_memory_elems = std::max(report.peak_memory_elems, live + report.result_elems);
  }
  max_clique = std::max(max_clique, static_cast<int>(tail.size()));
  report.treewidth = std::max(0, max_clique - 1);
  return report;
}

CostReport estimate(const Graph& graph, const EliminationOrder& order, const std::vector<int>& tail) {
  if (order.size() != graph.num_vertices()) {
    throw Error("order does not match the graph");
  }
  std::vector<std::vector<int>> scopes;
  for (auto [u, v] : graph.edges()) {
    scopes.push_back({u, v});
  }
  return estimate(scopes, order, tail);
}

CostReport estimate(const GraphicalModel& model, const EliminationOrder& order) {
  if (order.size() != model.num_vars()) {
    throw Error("order does not match the model");
  }
  std::vector<std::vector<int>> scopes = model.scopes();
  return estimate(scopes, order, model.free_vars());
}

FlopsPerMemory flops_per_memory(const CostReport& report) {
  if (report.per_step.empty()) {
    throw Error("cannot compute flops per memory for an empty model");
  }
  FlopsPerMemory out;
  for (const CostStep& s : report.per_step) {
    out.per_step.push_back(static_cast<double>(s.flops) / static_cast<double>(s.output_elems));
  }
  out.flops = report.total_flops;
  out.memory = report.total_memory_elems;
  return out;
}

std::vector<TradeoffRow> batch_tradeoff_table(const Circuit& circuit,
                                              const std::vector<int>& batch_sizes,
                                              Heuristic heuristic) {
  const int n = circuit.n_qubits();
  auto cost_for = [&](int c) {
    if (c < 0 || c > n) {
      throw Error("batch size " + std::to_string(c) + " outside [0, " + std::to_string(n) + "]");
    }
    std::vector<int> batch;
    std::map<int, int> fixed;
    for (int q = 0; q < n; ++q) {
      if (q < c) {
        batch.push_back(q);
      } else {
        fixed[q] = 0;
      }
    }
    GraphicalModel model = build_model(circuit, batch, fixed);
    RestrictedOrder plan = restricted_order_pipeline(model.graph(), model.free_vars(), heuristic);
    return estimate(model, plan.order);
  };

  const CostReport single = cost_for(0);
  std::vector<TradeoffRow> rows;
  for (int c : batch_sizes) {
    CostReport report = c == 0 ? single : cost_for(c);
    rows.push_back({c, report.treewidth, report.total_flops, report.peak_memory_elems,
                    flops_per_memory(report).aggregate(), single.total_flops * elems(c)});
  }
  return rows;
}

}  // namespace qbatch
