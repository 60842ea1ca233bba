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

#include <gtest/gtest.h>

#include <set>

#include "qbatch/error.h"
#include "test_util.h"

namespace qbatch {
namespace {

int non_diagonal_gates(const Circuit& c) {
  int count = 0;
  for (const GateApplication& g : c.gates()) {
    count += gate_is_diagonal(g.kind) ? 0 : 1;
  }
  return count;
}

TEST(BuildModel, SingleHadamard) {
  GraphicalModel m = build_model(parse_circuit("1\n1 h 0\n"), "0");
  EXPECT_EQ(m.num_vars(), 2);
  ASSERT_EQ(m.factors().size(), 3u);
  EXPECT_EQ(m.graph().num_edges(), 1u);
  EXPECT_EQ(m.factors()[0].role, FactorRole::Input);
  EXPECT_EQ(m.factors()[1].role, FactorRole::Gate);
  EXPECT_EQ(m.factors()[2].role, FactorRole::Output);
  EXPECT_EQ(m.factors()[2].vars(), (std::vector<int>{m.final_var(0)}));
  EXPECT_EQ(m.final_var(0), 1);
}

TEST(BuildModel, CzAddsEdgeNotVariable) {
  GraphicalModel m = build_model(testing::bell_like(), "00");
  EXPECT_EQ(m.num_vars(), 4);
  EXPECT_TRUE(m.graph().has_edge(m.final_var(0), m.final_var(1)));
  for (int q = 0; q < 2; ++q) {
    EXPECT_EQ(m.variables()[m.final_var(q)].generation, 1);
  }
  EXPECT_EQ(model_graph_stats(m), (ModelStats{4, 3, 7}));
}

TEST(BuildModel, OutputFactorValues) {
  GraphicalModel m = build_model(parse_circuit("2\n"), "01");
  const Factor& out0 = m.factors()[2];
  const Factor& out1 = m.factors()[3];
  EXPECT_EQ(out0.tensor.data()[0], Complex(1.0));
  EXPECT_EQ(out0.tensor.data()[1], Complex(0.0));
  EXPECT_EQ(out1.tensor.data()[0], Complex(0.0));
  EXPECT_EQ(out1.tensor.data()[1], Complex(1.0));
}

TEST(ModelStats, Examples) {
  EXPECT_EQ(model_graph_stats(build_model(parse_circuit("1\n"), "0")), (ModelStats{1, 0, 2}));
  EXPECT_EQ(model_graph_stats(build_model(parse_circuit("1\n1 h 0\n2 h 0\n"), "1")),
            (ModelStats{3, 2, 4}));
  // pinned regression values
  Circuit c = generate_random_circuit(2, 5, 0);
  ModelStats s = model_graph_stats(build_model(c, "0000"));
  EXPECT_EQ(s.n_vars, 4 + non_diagonal_gates(c));
  EXPECT_EQ(s.n_factors, c.gates().size() + 8);
}

TEST(BuildModel, VariableCountMatchesNonDiagonalGates) {
  for (int k = 2; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      Circuit c = generate_random_circuit(k, 9, seed);
      GraphicalModel m = build_model(c, std::string(c.n_qubits(), '0'));
      EXPECT_EQ(m.num_vars(), c.n_qubits() + non_diagonal_gates(c));
    }
  }
}

TEST(BuildModel, Invariants) {
  Circuit c = generate_random_circuit(3, 8, 2);
  GraphicalModel m = build_model(c, {1, 4}, {{0, 1}, {2, 0}, {3, 1}, {5, 0}, {6, 0}, {7, 1}, {8, 0}});
  std::set<std::pair<int, int>> labels;
  for (int i = 0; i < m.num_vars(); ++i) {
    EXPECT_EQ(m.variables()[i].id, i);
    EXPECT_TRUE(labels.insert({m.variables()[i].qubit, m.variables()[i].generation}).second);
  }
  Graph expected(m.num_vars());
  for (const Factor& f : m.factors()) {
    ASSERT_GE(f.vars().size(), 1u);
    ASSERT_LE(f.vars().size(), 2u);
    expected.make_clique(f.vars());
  }
  EXPECT_EQ(expected, m.graph());
  EXPECT_EQ(m.free_vars(), (std::vector<int>{m.final_var(1), m.final_var(4)}));
  for (const Factor& f : m.factors()) {
    if (f.role == FactorRole::Output) {
      EXPECT_NE(f.vars()[0], m.final_var(1));
      EXPECT_NE(f.vars()[0], m.final_var(4));
    }
  }
}

TEST(BuildModel, RejectsBadPartition) {
  Circuit c = testing::bell_like();
  EXPECT_THROW(build_model(c, {0}, {}), Error);
  EXPECT_THROW(build_model(c, {0}, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(build_model(c, {}, {{0, 2}, {1, 0}}), Error);
  EXPECT_THROW(build_model(c, {2}, {{0, 0}, {1, 0}}), Error);
  EXPECT_THROW(build_model(c, "0"), Error);
  EXPECT_THROW(build_model(c, "0a"), Error);
}

}  // namespace
}  // namespace qbatch
