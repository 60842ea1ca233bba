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

#include "qbatch/tensor.h"

#include <algorithm>
#include <string>

#include "qbatch/error.h"

namespace qbatch {

namespace {

// Guard against accidental huge allocations (2^34 complex doubles = 256 GiB).
constexpr int kMaxRank = 34;

void check_vars(const std::vector<int>& vars) {
  if (static_cast<int>(vars.size()) > kMaxRank) {
    throw Error("tensor rank " + std::to_string(vars.size()) + " exceeds limit");
  }
  std::vector<int> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("tensor variables must be distinct");
  }
}

std::size_t flat_offset(const std::vector<int>& vars, std::span<const int> bits) {
  if (bits.size() != vars.size()) {
    throw Error("expected " + std::to_string(vars.size()) + " index bits, got " +
                std::to_string(bits.size()));
  }
  std::size_t offset = 0;
  for (int b : bits) {
    offset = (offset << 1) | static_cast<std::size_t>(b & 1);
  }
  return offset;
}

}  // namespace

DenseTensor::DenseTensor(std::vector<int> vars, std::vector<Complex> data)
    : vars_(std::move(vars)), data_(std::move(data)) {
  check_vars(vars_);
  if (data_.size() != (std::size_t{1} << vars_.size())) {
    throw Error("tensor over " + std::to_string(vars_.size()) + " variables needs " +
                std::to_string(std::size_t{1} << vars_.size()) + " entries, got " +
                std::to_string(data_.size()));
  }
}

DenseTensor DenseTensor::zeros(std::vector<int> vars) {
  check_vars(vars);
  std::size_t n = std::size_t{1} << vars.size();
  return DenseTensor(std::move(vars), std::vector<Complex>(n));
}

Complex DenseTensor::scalar() const {
  if (!is_scalar()) {
    throw Error("tensor is not a scalar");
  }
  return data_[0];
}

bool DenseTensor::has_var(int var) const noexcept { return axis_of(var) >= 0; }

int DenseTensor::axis_of(int var) const noexcept {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

Complex DenseTensor::at(std::span<const int> bits) const { return data_[flat_offset(vars_, bits)]; }

Complex& DenseTensor::at(std::span<const int> bits) { return data_[flat_offset(vars_, bits)]; }

DenseTensor DenseTensor::permuted(const std::vector<int>& new_vars) const {
  if (new_vars.size() != vars_.size()) {
    throw Error("permutation must keep the variable set");
  }
  const int r = rank();
  // stride (in this tensor) of each axis of the output
  std::vector<std::size_t> strides(r);
  for (int a = 0; a < r; ++a) {
    int src = axis_of(new_vars[a]);
    if (src < 0) {
      throw Error("permutation must keep the variable set");
    }
    strides[a] = std::size_t{1} << (r - 1 - src);
  }
  DenseTensor out = zeros(new_vars);
  for (std::size_t o = 0; o < out.data_.size(); ++o) {
    std::size_t src = 0;
    for (int a = 0; a < r; ++a) {
      if ((o >> (r - 1 - a)) & 1) {
        src += strides[a];
      }
    }
    out.data_[o] = data_[src];
  }
  return out;
}

DenseTensor contract_over(std::span<const DenseTensor> operands, int var, ContractionWork* work) {
  std::vector<int> out_vars;
  std::uint64_t input_elems = 0;
  for (const DenseTensor& t : operands) {
    if (!t.has_var(var)) {
      throw Error("operand is not indexed by variable " + std::to_string(var));
    }
    input_elems += t.size();
    for (int v : t.vars()) {
      if (v != var) {
        out_vars.push_back(v);
      }
    }
  }
  std::sort(out_vars.begin(), out_vars.end());
  out_vars.erase(std::unique(out_vars.begin(), out_vars.end()), out_vars.end());
  if (static_cast<int>(out_vars.size()) >= kMaxRank) {
    throw Error("contraction result rank " + std::to_string(out_vars.size()) + " exceeds limit");
  }

  // Combined loop index: output variables (row-major) followed by `var` as
  // the least significant bit. For each operand, stride_of[k][b] is the flat
  // stride contributed by combined bit b.
  const int out_rank = static_cast<int>(out_vars.size());
  const int clique = out_rank + 1;
  std::vector<std::vector<std::size_t>> stride_of(operands.size(),
                                                  std::vector<std::size_t>(clique, 0));
  for (std::size_t k = 0; k < operands.size(); ++k) {
    const auto& tv = operands[k].vars();
    const int r = static_cast<int>(tv.size());
    for (int a = 0; a < r; ++a) {
      std::size_t stride = std::size_t{1} << (r - 1 - a);
      int bit;
      if (tv[a] == var) {
        bit = clique - 1;
      } else {
        bit = static_cast<int>(std::lower_bound(out_vars.begin(), out_vars.end(), tv[a]) -
                               out_vars.begin());
      }
      stride_of[k][bit] = stride;
    }
  }

  DenseTensor result = DenseTensor::zeros(out_vars);
  std::span<Complex> out = result.data();
  const std::size_t n_out = out.size();
  std::vector<std::size_t> base(operands.size());
  std::uint64_t inner_steps = 0;
  for (std::size_t o = 0; o < n_out; ++o) {
    for (std::size_t k = 0; k < operands.size(); ++k) {
      std::size_t off = 0;
      for (int b = 0; b < out_rank; ++b) {
        if ((o >> (out_rank - 1 - b)) & 1) {
          off += stride_of[k][b];
        }
      }
      base[k] = off;
    }
    Complex acc(0.0);
    for (int x = 0; x < kIndexDim; ++x) {
      Complex prod(1.0);
      for (std::size_t k = 0; k < operands.size(); ++k) {
        prod *= operands[k].data()[base[k] + (x ? stride_of[k][clique - 1] : 0)];
      }
      acc += prod;
      ++inner_steps;
    }
    out[o] = acc;
  }

  if (work != nullptr) {
    work->clique_size = clique;
    work->flops = 2 * inner_steps;
    work->input_elems = input_elems;
    work->output_elems = n_out;
  }
  return result;
}

}  // namespace qbatch
