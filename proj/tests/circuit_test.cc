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

#include <gtest/gtest.h>

#include <set>

#include "qbatch/error.h"
#include "test_util.h"

namespace qbatch {
namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_circuit(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseCircuit, SingleHadamard) {
  Circuit c = parse_circuit("1\n1 h 0");
  EXPECT_EQ(c.n_qubits(), 1);
  EXPECT_EQ(c.depth(), 1);
  ASSERT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.gates()[0], (GateApplication{GateKind::H, {0}, 1}));
}

TEST(ParseCircuit, Entangler) {
  Circuit c = testing::bell_like();
  EXPECT_EQ(c.n_qubits(), 2);
  EXPECT_EQ(c.depth(), 2);
  ASSERT_EQ(c.gates().size(), 3u);
  EXPECT_EQ(c.gates()[2], (GateApplication{GateKind::CZ, {0, 1}, 2}));
}

TEST(ParseCircuit, CommentsCaseAndCrlf) {
  Circuit c = parse_circuit("# header\r\n3  # qubits\r\n\r\n1 H 0\r\n1 X_1_2 1\r\n2 Cz 1 2\r\n3 T 0\r\n");
  EXPECT_EQ(c.n_qubits(), 3);
  EXPECT_EQ(c.depth(), 3);
  ASSERT_EQ(c.gates().size(), 4u);
  EXPECT_EQ(c.gates()[1].kind, GateKind::XHalf);
}

TEST(ParseCircuit, OrdersGatesByCycle) {
  Circuit c = parse_circuit("2\n2 h 0\n1 h 1\n1 h 0\n");
  ASSERT_EQ(c.gates().size(), 3u);
  EXPECT_EQ(c.gates()[0].cycle, 1);
  EXPECT_EQ(c.gates()[1].cycle, 1);
  EXPECT_EQ(c.gates()[2].cycle, 2);
}

TEST(ParseCircuit, EmptyCircuit) {
  Circuit c = parse_circuit("4\n");
  EXPECT_EQ(c.n_qubits(), 4);
  EXPECT_EQ(c.depth(), 0);
  EXPECT_TRUE(c.gates().empty());
}

TEST(ParseCircuit, RejectsRepeatedQubit) { EXPECT_EQ(parse_error_line("2\n1 cz 0 0"), 2); }

TEST(ParseCircuit, ReportsLineNumbers) {
  EXPECT_EQ(parse_error_line("2\n1 h 0\n1 foo 1\n"), 3);
  EXPECT_EQ(parse_error_line("2\n1 h 2\n"), 2);
  EXPECT_EQ(parse_error_line("2\n1 h 0\n# c\n1 t 0\n"), 4);
  EXPECT_EQ(parse_error_line("2\n1 h\n"), 2);
  EXPECT_EQ(parse_error_line("2\n1 h 0 1\n"), 2);
  EXPECT_EQ(parse_error_line("2\n0 h 0\n"), 2);
  EXPECT_EQ(parse_error_line("2\nx h 0\n"), 2);
  EXPECT_EQ(parse_error_line("-1\n"), 1);
  EXPECT_EQ(parse_error_line("# only a comment\n"), 0);  // end of input
}

TEST(Circuit, ConstructorValidates) {
  EXPECT_THROW(Circuit(1, {{GateKind::CZ, {0}, 1}}), Error);
  EXPECT_THROW(Circuit(2, {{GateKind::H, {0}, 1}, {GateKind::T, {0}, 1}}), Error);
  EXPECT_THROW(Circuit(2, {{GateKind::H, {-1}, 1}}), Error);
}

TEST(GateNames, RoundTrip) {
  for (GateKind k : {GateKind::H, GateKind::T, GateKind::XHalf, GateKind::YHalf, GateKind::CZ}) {
    EXPECT_EQ(gate_from_name(gate_name(k)), k);
  }
  EXPECT_EQ(gate_from_name("Y_1_2"), GateKind::YHalf);
  EXPECT_FALSE(gate_from_name("cnot").has_value());
}

TEST(RenderCircuit, RoundTripsGeneratedCircuits) {
  for (int k = 2; k <= 4; ++k) {
    for (int d = 2; d <= 12; d += 3) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Circuit c = generate_random_circuit(k, d, seed);
        EXPECT_EQ(parse_circuit(render_circuit(c)), c);
      }
    }
  }
}

TEST(RenderCircuit, RoundTripsRandomGateLists) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<GateApplication> gates;
    for (int cycle = 1; cycle <= 6; ++cycle) {
      std::vector<bool> used(n, false);
      for (int tries = 0; tries < n; ++tries) {
        int q = static_cast<int>(rng() % n);
        int r = static_cast<int>(rng() % n);
        int kind = static_cast<int>(rng() % 5);
        if (kind == 4) {
          if (q == r || used[q] || used[r]) continue;
          used[q] = used[r] = true;
          gates.push_back({GateKind::CZ, {q, r}, cycle});
        } else if (!used[q]) {
          used[q] = true;
          gates.push_back({static_cast<GateKind>(kind), {q}, cycle});
        }
      }
    }
    Circuit c(n, gates);
    EXPECT_EQ(parse_circuit(render_circuit(c)), c);
  }
}

TEST(Generator, Deterministic) {
  EXPECT_EQ(generate_random_circuit(2, 2, 7), generate_random_circuit(2, 2, 7));
  EXPECT_EQ(generate_random_circuit(4, 12, 99), generate_random_circuit(4, 12, 99));
  EXPECT_NE(generate_random_circuit(4, 12, 1), generate_random_circuit(4, 12, 2));
}

TEST(Generator, CzOnGridNeighbours) {
  for (auto [k, d, seed] : {std::tuple{2, 5, 0}, {3, 12, 4}, {5, 20, 9}}) {
    Circuit c = generate_random_circuit(k, d, seed);
    int cz = 0;
    for (const GateApplication& g : c.gates()) {
      if (g.kind != GateKind::CZ) continue;
      ++cz;
      int a = g.qubits[0], b = g.qubits[1];
      int dr = std::abs(a / k - b / k), dc = std::abs(a % k - b % k);
      EXPECT_EQ(dr + dc, 1) << a << " " << b;
    }
    EXPECT_GT(cz, 0);
  }
}

TEST(Generator, Structure) {
  const int k = 3;
  Circuit c = generate_random_circuit(k, 10, 5);
  EXPECT_EQ(c.n_qubits(), k * k);
  EXPECT_EQ(c.depth(), 10);
  std::set<int> first;
  std::vector<std::set<int>> cz_in(12);
  std::vector<int> t_count(k * k, 0);
  for (const GateApplication& g : c.gates()) {
    if (g.cycle == 1) {
      EXPECT_EQ(g.kind, GateKind::H);
      first.insert(g.qubits[0]);
    } else {
      EXPECT_NE(g.kind, GateKind::H);
    }
    if (g.kind == GateKind::CZ) {
      cz_in[g.cycle].insert(g.qubits.begin(), g.qubits.end());
    }
  }
  EXPECT_EQ(first.size(), static_cast<std::size_t>(k * k));
  // single-qubit gates only follow a CZ, and the first one on a qubit is T
  std::vector<bool> seen(k * k, false);
  for (const GateApplication& g : c.gates()) {
    if (g.cycle == 1 || g.kind == GateKind::CZ) continue;
    int q = g.qubits[0];
    EXPECT_TRUE(cz_in[g.cycle - 1].count(q)) << "cycle " << g.cycle << " qubit " << q;
    EXPECT_FALSE(cz_in[g.cycle].count(q));
    if (!seen[q]) {
      EXPECT_EQ(g.kind, GateKind::T);
      seen[q] = true;
    } else {
      EXPECT_NE(g.kind, GateKind::T);
    }
  }
}

TEST(Generator, StencilsCoverGridEdges) {
  for (int k = 2; k <= 6; ++k) {
    std::set<std::pair<int, int>> all;
    for (int s = 0; s < 8; ++s) {
      std::set<int> used;
      for (auto [a, b] : cz_stencil(k, s)) {
        EXPECT_TRUE(used.insert(a).second);
        EXPECT_TRUE(used.insert(b).second);
        all.insert({std::min(a, b), std::max(a, b)});
      }
    }
    EXPECT_EQ(all.size(), static_cast<std::size_t>(2 * k * (k - 1)));
  }
}

TEST(Generator, RejectsSmallInputs) {
  EXPECT_THROW(generate_random_circuit(1, 5, 0), Error);
  EXPECT_THROW(generate_random_circuit(3, 1, 0), Error);
}

}  // namespace
}  // namespace qbatch
