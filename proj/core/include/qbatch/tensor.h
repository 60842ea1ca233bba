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

#ifndef QBATCH_TENSOR_H
#define QBATCH_TENSOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qbatch {

using Complex = std::complex<double>;

/// Dimension of every index variable (qubits).
inline constexpr int kIndexDim = 2;

/// Complex tensor over an ordered list of binary index variables, stored
/// row-major: the first variable is the most significant bit of the flat
/// offset. A tensor with no variables is a scalar.
class DenseTensor {
 public:
  DenseTensor() : data_(1, Complex(1.0)) {}
  explicit DenseTensor(Complex scalar) : data_(1, scalar) {}
  DenseTensor(std::vector<int> vars, std::vector<Complex> data);

  static DenseTensor zeros(std::vector<int> vars);

  const std::vector<int>& vars() const noexcept { return vars_; }
  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  int rank() const noexcept { return static_cast<int>(vars_.size()); }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_scalar() const noexcept { return vars_.empty(); }
  Complex scalar() const;

  bool has_var(int var) const noexcept;
  /// Position of `var` in vars(), or -1.
  int axis_of(int var) const noexcept;

  /// Entry by per-axis bits (one bit per variable, in vars() order).
  Complex at(std::span<const int> bits) const;
  Complex& at(std::span<const int> bits);

  /// Same values with the variables permuted into `new_vars` order.
  DenseTensor permuted(const std::vector<int>& new_vars) const;

 private:
  std::vector<int> vars_;
  std::vector<Complex> data_;
};

/// Work done by one contraction: `clique_size` is the number of distinct
/// variables touched (summed one included); flops are counted as one complex
/// multiply plus one complex add per inner-loop element, i.e. 2 * 2^clique.
struct ContractionWork {
  int clique_size = 0;
  std::uint64_t flops = 0;
  std::uint64_t input_elems = 0;
  std::uint64_t output_elems = 0;
};

/// Sums the product of `operands` over `var`. Output variables are the union
/// of the operands' variables minus `var`, sorted ascending. All operands are
/// multiplied in one fused loop. An empty operand list is the constant 1, and
/// summing it over `var` gives the scalar kIndexDim.
/// Throws qbatch::Error if an operand is not indexed by `var`.
DenseTensor contract_over(std::span<const DenseTensor> operands, int var,
                          ContractionWork* work = nullptr);

}  // namespace qbatch

#endif  // QBATCH_TENSOR_H
