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

#ifndef QBATCH_GATES_H
#define QBATCH_GATES_H

#include <vector>

#include "qbatch/circuit.h"
#include "qbatch/tensor.h"

namespace qbatch {

/// Square unitary matrix, row-major.
struct GateMatrix {
  int dim;
  std::vector<Complex> entries;

  Complex operator()(int row, int col) const { return entries[row * dim + col]; }
};

/// Full matrix of the gate: 2x2 for single-qubit gates, 4x4 for CZ (basis
/// |q1 q2>, first qubit most significant).
GateMatrix gate_matrix(GateKind kind);

/// Factor contributed by the gate to the graphical model, over local axis
/// labels. Non-diagonal gates give F[in][out] = <out|G|in> over vars {0, 1}
/// (0 = incoming state, 1 = outgoing state). T gives its diagonal over {0}.
/// CZ gives F[a][b] = <ab|CZ|ab> over {0, 1}, one axis per qubit.
DenseTensor gate_tensor(GateKind kind);

}  // namespace qbatch

#endif  // QBATCH_GATES_H
