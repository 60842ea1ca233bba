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

#include "qbatch/oracle.h"

#include <cstdint>

#include "qbatch/error.h"
#include "qbatch/gates.h"

namespace qbatch {

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amplitudes) {
    s += std::norm(a);
  }
  return s;
}

void apply_gate(StateVector& state, const GateApplication& gate) {
  const GateMatrix m = gate_matrix(gate.kind);
  const int n = state.n_qubits;
  const std::size_t size = state.amplitudes.size();
  std::vector<Complex> next(size, Complex(0.0));
  // bit position (from the least significant end) of each addressed qubit
  std::vector<int> pos;
  for (int q : gate.qubits) {
    pos.push_back(n - 1 - q);
  }
  const int k = static_cast<int>(pos.size());
  for (std::size_t in = 0; in < size; ++in) {
    int col = 0;
    for (int a = 0; a < k; ++a) {
      col = (col << 1) | static_cast<int>((in >> pos[a]) & 1);
    }
    for (int row = 0; row < m.dim; ++row) {
      std::size_t out = in;
      for (int a = 0; a < k; ++a) {
        std::size_t bit = std::size_t{1} << pos[a];
        if ((row >> (k - 1 - a)) & 1) {
          out |= bit;
        } else {
          out &= ~bit;
        }
      }
      next[out] += m(row, col) * state.amplitudes[in];
    }
  }
  state.amplitudes = std::move(next);
}

StateVector evolve(const Circuit& circuit) {
  const int n = circuit.n_qubits();
  if (n > kOracleMaxQubits) {
    throw Error("state-vector oracle supports at most " + std::to_string(kOracleMaxQubits) +
                " qubits");
  }
  StateVector state{n, std::vector<Complex>(std::size_t{1} << n, Complex(0.0))};
  state.amplitudes[0] = 1.0;
  for (const GateApplication& g : circuit.gates()) {
    apply_gate(state, g);
  }
  return state;
}

Complex amplitude_of(const StateVector& state, const std::string& bits) {
  if (static_cast<int>(bits.size()) != state.n_qubits) {
    throw Error("bitstring length " + std::to_string(bits.size()) + " does not match " +
                std::to_string(state.n_qubits) + " qubits");
  }
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error("bitstring must contain only '0' and '1'");
    }
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return state.amplitudes[index];
}

}  // namespace qbatch
