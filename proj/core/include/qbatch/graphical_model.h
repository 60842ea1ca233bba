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

#ifndef QBATCH_GRAPHICAL_MODEL_H
#define QBATCH_GRAPHICAL_MODEL_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbatch/circuit.h"
#include "qbatch/graph.h"
#include "qbatch/tensor.h"

namespace qbatch {

/// Index variable: the basis state of `qubit` after `generation`
/// non-diagonal gates.
struct Variable {
  int id;
  int qubit;
  int generation;

  bool operator==(const Variable&) const = default;
};

enum class FactorRole { Input, Gate, Output };

struct Factor {
  FactorRole role;
  std::optional<GateKind> gate;  // set for FactorRole::Gate
  int cycle = 0;                 // 0 for input, depth + 1 for output factors
  DenseTensor tensor;            // vars are model variable ids

  const std::vector<int>& vars() const { return tensor.vars(); }
};

/// Line-graph form of a circuit: nodes are index variables, every factor is
/// a clique over its variables. One-variable factors (input and output
/// projections, T) are self-loops and leave no edge.
class GraphicalModel {
 public:
  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  const Graph& graph() const noexcept { return graph_; }
  int num_vars() const noexcept { return static_cast<int>(variables_.size()); }
  int n_qubits() const noexcept { return static_cast<int>(final_var_.size()); }

  /// Final-generation variables of the batch qubits, in ascending qubit order.
  const std::vector<int>& free_vars() const noexcept { return free_vars_; }
  /// Batch qubits, ascending; free_vars()[i] belongs to batch_qubits()[i].
  const std::vector<int>& batch_qubits() const noexcept { return batch_qubits_; }
  /// Projected output bit for every qubit not in the batch.
  const std::map<int, int>& fixed_outputs() const noexcept { return fixed_outputs_; }
  /// Last variable of each qubit line.
  int final_var(int qubit) const { return final_var_.at(qubit); }

  /// Factor variable lists, in factor order.
  std::vector<std::vector<int>> scopes() const;

 private:
  friend GraphicalModel build_model(const Circuit&, const std::vector<int>&,
                                    const std::map<int, int>&);

  std::vector<Variable> variables_;
  std::vector<Factor> factors_;
  Graph graph_;
  std::vector<int> free_vars_;
  std::vector<int> batch_qubits_;
  std::map<int, int> fixed_outputs_;
  std::vector<int> final_var_;
};

/// Lowers `circuit`. `batch_qubits` and the keys of `fixed_bits` must
/// partition the qubits; fixed bits must be 0 or 1. Batch qubits keep their
/// final variable free; fixed qubits get a <x| projection factor.
GraphicalModel build_model(const Circuit& circuit, const std::vector<int>& batch_qubits,
                           const std::map<int, int>& fixed_bits);

/// All qubits fixed to `bits` (one '0'/'1' per qubit, qubit 0 first).
GraphicalModel build_model(const Circuit& circuit, const std::string& bits);

struct ModelStats {
  int n_vars;
  std::size_t n_edges;
  std::size_t n_factors;

  bool operator==(const ModelStats&) const = default;
};

ModelStats model_graph_stats(const GraphicalModel& model);

/// Parses a '0'/'1' string of length n_qubits into per-qubit bits.
std::vector<int> parse_bitstring(const std::string& bits, int n_qubits);

}  // namespace qbatch

#endif  // QBATCH_GRAPHICAL_MODEL_H
