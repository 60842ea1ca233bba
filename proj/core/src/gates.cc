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

#include "qbatch/gates.h"

#include <cmath>
#include <numbers>

namespace qbatch {

GateMatrix gate_matrix(GateKind kind) {
  const Complex i(0.0, 1.0);
  switch (kind) {
    case GateKind::H: {
      const double h = std::numbers::sqrt2 / 2;
      return {2, {h, h, h, -h}};
    }
    case GateKind::T:
      return {2, {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)}};
    case GateKind::XHalf:
      return {2, {0.5 * (1.0 + i), 0.5 * (1.0 - i), 0.5 * (1.0 - i), 0.5 * (1.0 + i)}};
    case GateKind::YHalf:
      return {2, {0.5 * (1.0 + i), 0.5 * (-1.0 - i), 0.5 * (1.0 + i), 0.5 * (1.0 + i)}};
    case GateKind::CZ: {
      GateMatrix m{4, std::vector<Complex>(16, 0.0)};
      for (int d = 0; d < 4; ++d) {
        m.entries[d * 4 + d] = d == 3 ? -1.0 : 1.0;
      }
      return m;
    }
  }
  return {0, {}};
}

DenseTensor gate_tensor(GateKind kind) {
  GateMatrix m = gate_matrix(kind);
  if (kind == GateKind::T) {
    return DenseTensor({0}, {m(0, 0), m(1, 1)});
  }
  if (kind == GateKind::CZ) {
    return DenseTensor({0, 1}, {m(0, 0), m(1, 1), m(2, 2), m(3, 3)});
  }
  return DenseTensor({0, 1}, {m(0, 0), m(1, 0), m(0, 1), m(1, 1)});
}

}  // namespace qbatch
