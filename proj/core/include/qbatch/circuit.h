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

#ifndef QBATCH_CIRCUIT_H
#define QBATCH_CIRCUIT_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qbatch {

enum class GateKind { H, T, XHalf, YHalf, CZ };

/// Number of qubits the gate acts on.
int gate_arity(GateKind kind) noexcept;

/// Diagonal gates (T, CZ) leave the computational basis of their qubits
/// unchanged and therefore never introduce a new index variable.
bool gate_is_diagonal(GateKind kind) noexcept;

/// Lower-case name used by the circuit text format (`h`, `t`, `x_1_2`,
/// `y_1_2`, `cz`).
std::string_view gate_name(GateKind kind) noexcept;

/// Case-insensitive inverse of gate_name.
std::optional<GateKind> gate_from_name(std::string_view name);

struct GateApplication {
  GateKind kind;
  std::vector<int> qubits;
  int cycle;

  bool operator==(const GateApplication&) const = default;
};

/// An ordered list of gate applications. Construction validates every
/// invariant: qubit indices in range and distinct per gate, cycles >= 1, no
/// qubit touched twice in one cycle. Gates are stably sorted by cycle.
class Circuit {
 public:
  Circuit(int n_qubits, std::vector<GateApplication> gates);

  int n_qubits() const noexcept { return n_qubits_; }
  /// Largest cycle index in use, 0 for an empty circuit.
  int depth() const noexcept { return depth_; }
  const std::vector<GateApplication>& gates() const noexcept { return gates_; }

  bool operator==(const Circuit&) const = default;

 private:
  int n_qubits_;
  int depth_;
  std::vector<GateApplication> gates_;
};

/// Reads the plain-text circuit format:
///
///     # comment
///     <n_qubits>
///     <cycle> <gate> <q1> [<q2>]
///
/// Cycles are 1-based, qubits 0-based. LF and CRLF line endings are accepted.
/// Throws ParseError carrying the offending line number.
Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit; parse_circuit(render_circuit(c)) == c.
std::string render_circuit(const Circuit& circuit);

/// Random grid circuit on a k x k lattice (qubit r*k + c sits at row r,
/// column c). Cycle 1 applies H everywhere. Cycle t >= 2 applies CZ stencil
/// (t - 2) mod 8 and, on each qubit that was in a CZ during cycle t - 1 but is
/// idle in the current stencil, one single-qubit gate: T the first time, then
/// X^1/2 or Y^1/2 with equal probability. Pure function of its arguments.
Circuit generate_random_circuit(int grid_side, int depth, std::uint64_t seed);

/// The CZ pairs of stencil `index` (0..7) on a k x k grid. Every pair is
/// grid-adjacent and no qubit appears twice.
std::vector<std::pair<int, int>> cz_stencil(int grid_side, int index);

}  // namespace qbatch

#endif  // QBATCH_CIRCUIT_H
