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

#include "qbatch/circuit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <sstream>

#include "qbatch/error.h"

namespace qbatch {

namespace {

constexpr GateKind kAllGates[] = {GateKind::H, GateKind::T, GateKind::XHalf, GateKind::YHalf,
                                  GateKind::CZ};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::optional<long long> parse_int(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) {
      tokens.push_back(line.substr(start, i - start));
    }
  }
  return tokens;
}

// Checks a gate against the circuit invariants; returns an empty string when
// the gate is fine. `busy` holds, per qubit, the last cycle it was used in.
std::string check_gate(const GateApplication& g, int n_qubits, std::vector<int>& busy) {
  if (static_cast<int>(g.qubits.size()) != gate_arity(g.kind)) {
    return "gate '" + std::string(gate_name(g.kind)) + "' expects " +
           std::to_string(gate_arity(g.kind)) + " qubit(s)";
  }
  if (g.cycle < 1) {
    return "cycle must be >= 1, got " + std::to_string(g.cycle);
  }
  for (int q : g.qubits) {
    if (q < 0 || q >= n_qubits) {
      return "qubit " + std::to_string(q) + " out of range [0, " + std::to_string(n_qubits) + ")";
    }
  }
  if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
    return "repeated qubit " + std::to_string(g.qubits[0]) + " on two-qubit gate";
  }
  for (int q : g.qubits) {
    if (busy[q] == g.cycle) {
      return "qubit " + std::to_string(q) + " used twice in cycle " + std::to_string(g.cycle);
    }
  }
  for (int q : g.qubits) {
    busy[q] = g.cycle;
  }
  return {};
}

}  // namespace

int gate_arity(GateKind kind) noexcept { return kind == GateKind::CZ ? 2 : 1; }

bool gate_is_diagonal(GateKind kind) noexcept {
  return kind == GateKind::T || kind == GateKind::CZ;
}

std::string_view gate_name(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::H:
      return "h";
    case GateKind::T:
      return "t";
    case GateKind::XHalf:
      return "x_1_2";
    case GateKind::YHalf:
      return "y_1_2";
    case GateKind::CZ:
      return "cz";
  }
  return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
  std::string key = lower(name);
  for (GateKind kind : kAllGates) {
    if (gate_name(kind) == key) {
      return kind;
    }
  }
  return std::nullopt;
}

Circuit::Circuit(int n_qubits, std::vector<GateApplication> gates)
    : n_qubits_(n_qubits), depth_(0), gates_(std::move(gates)) {
  if (n_qubits_ < 1) {
    throw Error("circuit needs at least one qubit");
  }
  std::stable_sort(gates_.begin(), gates_.end(),
                   [](const GateApplication& a, const GateApplication& b) { return a.cycle < b.cycle; });
  std::vector<int> busy(n_qubits_, 0);
  for (const GateApplication& g : gates_) {
    if (std::string why = check_gate(g, n_qubits_, busy); !why.empty()) {
      throw Error(why);
    }
    depth_ = std::max(depth_, g.cycle);
  }
}

Circuit parse_circuit(std::string_view text) {
  std::optional<int> n_qubits;
  std::vector<GateApplication> gates;
  // Gates arrive in file order, not cycle order, so track every (qubit,
  // cycle) pair seen so far.
  std::vector<std::vector<int>> used_cycles;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) {
        break;
      }
      continue;
    }

    if (!n_qubits) {
      auto n = parse_int(tokens[0]);
      if (tokens.size() != 1 || !n || *n < 1 || *n > 1'000'000) {
        throw ParseError(line_no, "expected a positive qubit count");
      }
      n_qubits = static_cast<int>(*n);
      used_cycles.assign(*n_qubits, {});
      continue;
    }

    if (tokens.size() < 3 || tokens.size() > 4) {
      throw ParseError(line_no, "malformed gate line, expected '<cycle> <gate> <q1> [<q2>]'");
    }
    auto cycle = parse_int(tokens[0]);
    if (!cycle || *cycle < 1 || *cycle > 100'000'000) {
      throw ParseError(line_no, "bad cycle '" + std::string(tokens[0]) + "'");
    }
    auto kind = gate_from_name(tokens[1]);
    if (!kind) {
      throw ParseError(line_no, "unknown gate '" + std::string(tokens[1]) + "'");
    }
    if (static_cast<int>(tokens.size()) - 2 != gate_arity(*kind)) {
      throw ParseError(line_no, "gate '" + std::string(gate_name(*kind)) + "' expects " +
                                    std::to_string(gate_arity(*kind)) + " qubit(s)");
    }
    GateApplication g{*kind, {}, static_cast<int>(*cycle)};
    for (std::size_t t = 2; t < tokens.size(); ++t) {
      auto q = parse_int(tokens[t]);
      if (!q) {
        throw ParseError(line_no, "bad qubit index '" + std::string(tokens[t]) + "'");
      }
      if (*q < 0 || *q >= *n_qubits) {
        throw ParseError(line_no, "qubit " + std::to_string(*q) + " out of range [0, " +
                                      std::to_string(*n_qubits) + ")");
      }
      g.qubits.push_back(static_cast<int>(*q));
    }
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
      throw ParseError(line_no, "repeated qubit " + std::to_string(g.qubits[0]) + " on two-qubit gate");
    }
    for (int q : g.qubits) {
      auto& seen = used_cycles[q];
      if (std::find(seen.begin(), seen.end(), g.cycle) != seen.end()) {
        throw ParseError(line_no, "qubit " + std::to_string(q) + " used twice in cycle " +
                                      std::to_string(g.cycle));
      }
      seen.push_back(g.cycle);
    }
    gates.push_back(std::move(g));
  }

  if (!n_qubits) {
    throw ParseError(0, "missing qubit count");
  }
  return Circuit(*n_qubits, std::move(gates));
}

std::string render_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << circuit.n_qubits() << '\n';
  for (const GateApplication& g : circuit.gates()) {
    out << g.cycle << ' ' << gate_name(g.kind);
    for (int q : g.qubits) {
      out << ' ' << q;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::pair<int, int>> cz_stencil(int grid_side, int index) {
  // Horizontal (h) and vertical (v) layers, each selecting one parity class of
  // the lattice edges. Consecutive stencils alternate direction.
  struct Layer {
    bool horizontal;
    int along;   // parity of the coordinate along the edge direction
    int across;  // parity of the coordinate across it
  };
  static constexpr Layer kLayers[8] = {
      {true, 0, 0}, {false, 0, 0}, {true, 1, 1}, {false, 1, 1},
      {true, 0, 1}, {false, 0, 1}, {true, 1, 0}, {false, 1, 0},
  };
  const Layer& layer = kLayers[((index % 8) + 8) % 8];
  std::vector<std::pair<int, int>> pairs;
  for (int r = 0; r < grid_side; ++r) {
    for (int c = 0; c < grid_side; ++c) {
      if (layer.horizontal) {
        if (c + 1 < grid_side && c % 2 == layer.along && r % 2 == layer.across) {
          pairs.emplace_back(r * grid_side + c, r * grid_side + c + 1);
        }
      } else {
        if (r + 1 < grid_side && r % 2 == layer.along && c % 2 == layer.across) {
          pairs.emplace_back(r * grid_side + c, (r + 1) * grid_side + c);
        }
      }
    }
  }
  return pairs;
}

Circuit generate_random_circuit(int grid_side, int depth, std::uint64_t seed) {
  if (grid_side < 2) {
    throw Error("grid side must be >= 2");
  }
  if (depth < 2) {
    throw Error("depth must be >= 2");
  }
  const int n = grid_side * grid_side;
  std::mt19937_64 rng(seed);
  std::vector<GateApplication> gates;
  for (int q = 0; q < n; ++q) {
    gates.push_back({GateKind::H, {q}, 1});
  }

  std::vector<bool> had_single_qubit_gate(n, false);
  std::vector<bool> in_cz_prev(n, false);
  for (int cycle = 2; cycle <= depth; ++cycle) {
    std::vector<bool> in_cz(n, false);
    for (auto [a, b] : cz_stencil(grid_side, cycle - 2)) {
      gates.push_back({GateKind::CZ, {a, b}, cycle});
      in_cz[a] = in_cz[b] = true;
    }
    for (int q = 0; q < n; ++q) {
      if (in_cz[q] || !in_cz_prev[q]) {
        continue;
      }
      GateKind kind = GateKind::T;
      if (had_single_qubit_gate[q]) {
        // Top bit of the engine output; std::uniform_int_distribution is not
        // portable across standard libraries.
        kind = (rng() >> 63) ? GateKind::YHalf : GateKind::XHalf;
      }
      had_single_qubit_gate[q] = true;
      gates.push_back({kind, {q}, cycle});
    }
    in_cz_prev = std::move(in_cz);
  }
  return Circuit(n, std::move(gates));
}

}  // namespace qbatch
