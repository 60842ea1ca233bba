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

#include "qbatch/graphical_model.h"

#include <algorithm>

#include "qbatch/error.h"
#include "qbatch/gates.h"

namespace qbatch {

std::vector<std::vector<int>> GraphicalModel::scopes() const {
  std::vector<std::vector<int>> out;
  out.reserve(factors_.size());
  for (const Factor& f : factors_) {
    out.push_back(f.vars());
  }
  return out;
}

GraphicalModel build_model(const Circuit& circuit, const std::vector<int>& batch_qubits,
                           const std::map<int, int>& fixed_bits) {
  const int n = circuit.n_qubits();
  std::vector<int> role(n, -1);  // -1 unassigned, 0 fixed, 1 batch
  for (int q : batch_qubits) {
    if (q < 0 || q >= n) {
      throw Error("batch qubit " + std::to_string(q) + " out of range");
    }
    if (role[q] != -1) {
      throw Error("batch qubit " + std::to_string(q) + " listed twice");
    }
    role[q] = 1;
  }
  for (auto [q, bit] : fixed_bits) {
    if (q < 0 || q >= n) {
      throw Error("fixed qubit " + std::to_string(q) + " out of range");
    }
    if (role[q] != -1) {
      throw Error("qubit " + std::to_string(q) + " is both batch and fixed");
    }
    if (bit != 0 && bit != 1) {
      throw Error("output bit for qubit " + std::to_string(q) + " must be 0 or 1");
    }
    role[q] = 0;
  }
  for (int q = 0; q < n; ++q) {
    if (role[q] == -1) {
      throw Error("qubit " + std::to_string(q) + " is neither batch nor fixed");
    }
  }

  GraphicalModel model;
  std::vector<int> current(n);
  std::vector<int> generation(n, 0);
  auto new_var = [&](int qubit) {
    int id = static_cast<int>(model.variables_.size());
    model.variables_.push_back({id, qubit, generation[qubit]});
    return id;
  };

  for (int q = 0; q < n; ++q) {
    current[q] = new_var(q);
    model.factors_.push_back({FactorRole::Input, std::nullopt, 0, DenseTensor({current[q]}, {1.0, 0.0})});
  }

  for (const GateApplication& g : circuit.gates()) {
    DenseTensor local = gate_tensor(g.kind);
    std::vector<int> vars;
    if (g.kind == GateKind::CZ) {
      vars = {current[g.qubits[0]], current[g.qubits[1]]};
    } else if (gate_is_diagonal(g.kind)) {
      vars = {current[g.qubits[0]]};
    } else {
      int q = g.qubits[0];
      int old_var = current[q];
      ++generation[q];
      current[q] = new_var(q);
      vars = {old_var, current[q]};
    }
    std::vector<Complex> data(local.data().begin(), local.data().end());
    model.factors_.push_back({FactorRole::Gate, g.kind, g.cycle, DenseTensor(vars, std::move(data))});
  }

  for (int q = 0; q < n; ++q) {
    if (role[q] == 0) {
      int bit = fixed_bits.at(q);
      model.fixed_outputs_[q] = bit;
      model.factors_.push_back({FactorRole::Output, std::nullopt, circuit.depth() + 1,
                                DenseTensor({current[q]}, {bit == 0 ? 1.0 : 0.0, bit == 1 ? 1.0 : 0.0})});
    } else {
      model.batch_qubits_.push_back(q);
      model.free_vars_.push_back(current[q]);
    }
  }
  model.final_var_ = current;

  model.graph_ = Graph(model.num_vars());
  for (const Factor& f : model.factors_) {
    model.graph_.make_clique(f.vars());
  }
  return model;
}

std::vector<int> parse_bitstring(const std::string& bits, int n_qubits) {
  if (static_cast<int>(bits.size()) != n_qubits) {
    throw Error("bitstring has " + std::to_string(bits.size()) + " bits, circuit has " +
                std::to_string(n_qubits) + " qubits");
  }
  std::vector<int> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error("bitstring must contain only '0' and '1'");
    }
    out.push_back(c - '0');
  }
  return out;
}

GraphicalModel build_model(const Circuit& circuit, const std::string& bits) {
  std::vector<int> values = parse_bitstring(bits, circuit.n_qubits());
  std::map<int, int> fixed;
  for (int q = 0; q < circuit.n_qubits(); ++q) {
    fixed[q] = values[q];
  }
  return build_model(circuit, {}, fixed);
}

ModelStats model_graph_stats(const GraphicalModel& model) {
  return {model.num_vars(), model.graph().num_edges(), model.factors().size()};
}

}  // namespace qbatch
