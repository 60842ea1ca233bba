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

#include "qbatch/contraction.h"

#include <algorithm>
#include <stdexcept>

#include "qbatch/error.h"

namespace qbatch {

std::size_t BucketSet::tensor_count() const {
  std::size_t n = 0;
  for (const auto& b : buckets_) {
    n += b.size();
  }
  return n;
}

namespace {

int lowest_rank(const DenseTensor& t, const EliminationOrder& order) {
  int best = order.size() + 1;
  for (int v : t.vars()) {
    if (v < 0 || v >= order.size()) {
      throw Error("variable " + std::to_string(v) + " has no rank in the order");
    }
    best = std::min(best, order.rank_of(v));
  }
  return best;
}

}  // namespace

BucketSet form_buckets(const std::vector<DenseTensor>& tensors, const EliminationOrder& order) {
  BucketSet buckets(order.size());
  for (const DenseTensor& t : tensors) {
    if (t.is_scalar()) {
      throw Error("scalar tensors cannot be placed in a bucket");
    }
    buckets.bucket(lowest_rank(t, order)).push_back({t, false});
  }
  return buckets;
}

BucketSet form_buckets(const GraphicalModel& model, const EliminationOrder& order) {
  if (order.size() != model.num_vars()) {
    throw Error("order covers " + std::to_string(order.size()) + " variables, model has " +
                std::to_string(model.num_vars()));
  }
  std::vector<DenseTensor> tensors;
  tensors.reserve(model.factors().size());
  for (const Factor& f : model.factors()) {
    tensors.push_back(f.tensor);
  }
  return form_buckets(tensors, order);
}

PartialContraction process_buckets(BucketSet& buckets, const EliminationOrder& order,
                                   int stop_index, ContractionCounters* counters) {
  const int n = order.size();
  if (buckets.size() != n) {
    throw Error("bucket count does not match the order");
  }
  if (stop_index < 0 || stop_index > n) {
    throw Error("stop index " + std::to_string(stop_index) + " outside [0, " + std::to_string(n) +
                "]");
  }

  PartialContraction result;
  std::uint64_t live = 0;
  for (int i = 1; i <= stop_index; ++i) {
    const int v = order.vertex_at(i);
    std::vector<DenseTensor> operands;
    std::uint64_t consumed = 0;
    for (BucketTensor& bt : buckets.bucket(i)) {
      if (bt.intermediate) {
        consumed += bt.tensor.size();
      }
      operands.push_back(std::move(bt.tensor));
    }
    buckets.bucket(i).clear();

    ContractionWork work;
    DenseTensor t = contract_over(operands, v, &work);
    if (counters != nullptr) {
      counters->steps.push_back(
          {i, v, work.clique_size, work.flops, work.input_elems, work.output_elems});
      counters->total_flops += work.flops;
      counters->allocated_elems += work.output_elems;
      counters->peak_live_elems = std::max(counters->peak_live_elems, live + work.output_elems);
    }
    live -= consumed;

    if (t.is_scalar()) {
      result.accumulator *= t.scalar();
      continue;
    }
    int k = lowest_rank(t, order);
    if (k <= i) {
      throw std::logic_error("intermediate landed in an already processed bucket");
    }
    live += t.size();
    buckets.bucket(k).push_back({std::move(t), true});
  }

  for (int i = stop_index + 1; i <= n; ++i) {
    for (BucketTensor& bt : buckets.bucket(i)) {
      result.leftovers.push_back(std::move(bt.tensor));
    }
    buckets.bucket(i).clear();
  }
  result.live_intermediate_elems = live;
  return result;
}

DenseTensor merge_free_tensors(const std::vector<DenseTensor>& leftovers,
                               const std::vector<int>& free_vars, Complex accumulator) {
  const int r = static_cast<int>(free_vars.size());
  // stride_of[k][b]: flat stride in leftover k of output bit b
  std::vector<std::vector<std::size_t>> stride_of(leftovers.size(), std::vector<std::size_t>(r, 0));
  for (std::size_t k = 0; k < leftovers.size(); ++k) {
    const auto& tv = leftovers[k].vars();
    const int tr = static_cast<int>(tv.size());
    for (int a = 0; a < tr; ++a) {
      auto it = std::find(free_vars.begin(), free_vars.end(), tv[a]);
      if (it == free_vars.end()) {
        throw Error("leftover tensor is indexed by non-free variable " + std::to_string(tv[a]));
      }
      stride_of[k][it - free_vars.begin()] = std::size_t{1} << (tr - 1 - a);
    }
  }

  DenseTensor out = DenseTensor::zeros(free_vars);
  std::span<Complex> data = out.data();
  for (std::size_t o = 0; o < data.size(); ++o) {
    Complex value = accumulator;
    for (std::size_t k = 0; k < leftovers.size(); ++k) {
      std::size_t off = 0;
      for (int b = 0; b < r; ++b) {
        if ((o >> (r - 1 - b)) & 1) {
          off += stride_of[k][b];
        }
      }
      value *= leftovers[k].data()[off];
    }
    data[o] = value;
  }
  return out;
}

DenseTensor contract_model(const GraphicalModel& model, const SimulationOptions& options) {
  RestrictedOrder plan =
      restricted_order_pipeline(model.graph(), model.free_vars(), options.heuristic);
  BucketSet buckets = form_buckets(model, plan.order);
  const int stop = model.num_vars() - static_cast<int>(model.free_vars().size());
  PartialContraction partial = process_buckets(buckets, plan.order, stop, options.counters);
  DenseTensor result = merge_free_tensors(partial.leftovers, model.free_vars(), partial.accumulator);
  if (options.counters != nullptr && !model.free_vars().empty()) {
    options.counters->allocated_elems += result.size();
    options.counters->peak_live_elems =
        std::max(options.counters->peak_live_elems, partial.live_intermediate_elems + result.size());
  }
  return result;
}

Complex simulate_amplitude(const Circuit& circuit, const std::string& bits,
                           const SimulationOptions& options) {
  return contract_model(build_model(circuit, bits), options).scalar();
}

DenseTensor simulate_batch(const Circuit& circuit, const std::vector<int>& batch_qubits,
                           const std::map<int, int>& fixed_bits, const SimulationOptions& options) {
  return contract_model(build_model(circuit, batch_qubits, fixed_bits), options);
}

}  // namespace qbatch
