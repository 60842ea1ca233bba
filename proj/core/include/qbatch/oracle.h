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

#ifndef QBATCH_ORACLE_H
#define QBATCH_ORACLE_H

#include <string>
#include <vector>

#include "qbatch/circuit.h"
#include "qbatch/tensor.h"

namespace qbatch {

inline constexpr int kOracleMaxQubits = 20;

/// Full 2^n state. Amplitude index: qubit 0 is the most significant bit.
struct StateVector {
  int n_qubits;
  std::vector<Complex> amplitudes;

  double norm_squared() const;
};

/// Applies every gate's full matrix to |0...0>, in cycle order. Throws
/// qbatch::Error above kOracleMaxQubits qubits.
StateVector evolve(const Circuit& circuit);

/// Applies one gate in place.
void apply_gate(StateVector& state, const GateApplication& gate);

Complex amplitude_of(const StateVector& state, const std::string& bits);

}  // namespace qbatch

#endif  // QBATCH_ORACLE_H
