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

#ifndef QBATCH_CONTRACTION_H
#define QBATCH_CONTRACTION_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbatch/circuit.h"
#include "qbatch/graphical_model.h"
#include "qbatch/ordering.h"
#include "qbatch/tensor.h"

namespace qbatch {

struct BucketTensor {
  DenseTensor tensor;
  bool intermediate = false;  // produced by an earlier bucket
};

/// Buckets indexed by rank 1..n; each tensor sits in the bucket of its
/// lowest-ranked variable.
class BucketSet {
 public:
  explicit BucketSet(int n_ranks = 0) : buckets_(n_ranks) {}

  int size() const noexcept { return static_cast<int>(buckets_.size()); }
  std::vector<BucketTensor>& bucket(int rank) { return buckets_.at(rank - 1); }
  const std::vector<BucketTensor>& bucket(int rank) const { return buckets_.at(rank - 1); }
  std::size_t tensor_count() const;

 private:
  std::vector<std::vector<BucketTensor>> buckets_;
};

/// Places every tensor in the bucket of its lowest-ranked variable.
/// Variable-free tensors are not allowed.
BucketSet form_buckets(const std::vector<DenseTensor>& tensors, const EliminationOrder& order);
BucketSet form_buckets(const GraphicalModel& model, const EliminationOrder& order);

struct StepRecord {
  int rank;
  int vertex;
  int clique_size;
  std::uint64_t flops;
  std::uint64_t input_elems;
  std::uint64_t output_elems;
};

/// Counters filled in by the engine while it runs. Flops use the fused-loop
/// convention of contract_over. Live memory counts intermediates only.
struct ContractionCounters {
  std::vector<StepRecord> steps;
  std::uint64_t total_flops = 0;
  std::uint64_t allocated_elems = 0;  // intermediates and the merged result
  std::uint64_t peak_live_elems = 0;
};

struct PartialContraction {
  Complex accumulator{1.0};
  /// Tensors left in buckets stop_index + 1 .. n, in bucket order.
  std::vector<DenseTensor> leftovers;
  /// Total size of the intermediates among the leftovers.
  std::uint64_t live_intermediate_elems = 0;
};

/// Eliminates the variables of ranks 1..stop_index. Scalar intermediates are
/// multiplied into the accumulator; others move to the bucket of their
/// lowest-ranked remaining variable. Consumes `buckets`.
PartialContraction process_buckets(BucketSet& buckets, const EliminationOrder& order,
                                   int stop_index, ContractionCounters* counters = nullptr);

/// Outer/pointwise product of the leftovers, scaled by the accumulator,
/// indexed by `free_vars` in the given order. No summation happens here.
DenseTensor merge_free_tensors(const std::vector<DenseTensor>& leftovers,
                               const std::vector<int>& free_vars, Complex accumulator);

struct SimulationOptions {
  Heuristic heuristic = Heuristic::MinFill;
  ContractionCounters* counters = nullptr;
};

/// <x|U|0> for the bitstring `bits` (qubit 0 first).
Complex simulate_amplitude(const Circuit& circuit, const std::string& bits,
                           const SimulationOptions& options = {});

/// All amplitudes over `batch_qubits` with the other qubits projected onto
/// `fixed_bits`. The result is indexed by the batch qubits in ascending
/// order, the lowest qubit being the most significant bit.
DenseTensor simulate_batch(const Circuit& circuit, const std::vector<int>& batch_qubits,
                           const std::map<int, int>& fixed_bits,
                           const SimulationOptions& options = {});

/// Runs the pipeline on an already built model.
DenseTensor contract_model(const GraphicalModel& model, const SimulationOptions& options = {});

}  // namespace qbatch

#endif  // QBATCH_CONTRACTION_H
