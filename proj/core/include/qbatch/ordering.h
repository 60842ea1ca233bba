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

#ifndef QBATCH_ORDERING_H
#define QBATCH_ORDERING_H

#include <string>
#include <string_view>
#include <vector>

#include "qbatch/graph.h"

namespace qbatch {

/// Bijection from vertices to ranks 1..n. Rank 1 is eliminated first.
class EliminationOrder {
 public:
  EliminationOrder() = default;
  /// `sequence[i]` is the vertex with rank i + 1. Throws if it is not a
  /// permutation of 0..n-1.
  explicit EliminationOrder(std::vector<int> sequence);

  int size() const noexcept { return static_cast<int>(sequence_.size()); }
  int rank_of(int vertex) const { return rank_.at(vertex); }
  int vertex_at(int rank) const { return sequence_.at(rank - 1); }
  const std::vector<int>& sequence() const noexcept { return sequence_; }

  bool operator==(const EliminationOrder&) const = default;

 private:
  std::vector<int> sequence_;
  std::vector<int> rank_;
};

/// Whitespace-separated vertex ids in rank order.
std::string format_order(const EliminationOrder& order);
EliminationOrder parse_order(std::string_view text);

enum class Heuristic { MinFill, MinDegree };

std::string_view heuristic_name(Heuristic h) noexcept;
/// Accepts "min_fill" / "min_degree" (also with '-').
Heuristic heuristic_from_name(std::string_view name);

/// Greedy elimination: repeatedly eliminate the vertex with the fewest fill
/// edges (or the smallest degree), ties to the smallest id.
EliminationOrder greedy_order(const Graph& graph, Heuristic heuristic);

inline constexpr int kExhaustiveLimit = 12;

/// Minimum-treewidth order by branch and bound over elimination prefixes.
/// Throws qbatch::Error for graphs with more than kExhaustiveLimit vertices.
EliminationOrder exhaustive_order(const Graph& graph);

/// Chordal supergraph obtained by eliminating vertices in rank order and
/// connecting, at each step, all pairs of higher-ranked neighbours.
struct FillInGraph {
  Graph graph;
};

FillInGraph build_chordal_graph(const Graph& graph, const EliminationOrder& order);

/// Per-rank elimination clique sizes: entry r - 1 is 1 + the number of
/// higher-ranked neighbours of vertex_at(r) in the fill-in graph.
std::vector<int> elimination_clique_sizes(const Graph& graph, const EliminationOrder& order);

/// Removes fill edges from `fill_in` (a triangulation of `graph`) one at a
/// time while the result stays chordal, until it is a minimal triangulation
/// of `graph`. An edge uv of a chordal graph can be dropped without losing
/// chordality exactly when the common neighbourhood of u and v is a clique.
FillInGraph minimal_triangulation(const Graph& graph, FillInGraph fill_in);

/// Perfect elimination order of the minimal triangulation sandwiched
/// between `graph` and the fill-in of `order`. Its treewidth never exceeds
/// that of `order`, and every perfect elimination order of that
/// triangulation has the same fill on `graph`.
EliminationOrder minimal_refinement(const Graph& graph, const EliminationOrder& order);

/// Largest elimination clique minus one; 0 for an empty graph.
int treewidth_of_order(const Graph& graph, const EliminationOrder& order);

/// True when `order` produces no fill edges on `graph`.
bool is_perfect_elimination_order(const Graph& graph, const EliminationOrder& order);

/// Zero-fill test: runs maximum cardinality search and checks the result is
/// a perfect elimination order.
bool is_chordal(const Graph& graph);

/// Maximum cardinality search with the vertices of `tail` labelled first, so
/// they receive the highest ranks. Ties go to the smallest id. Requires a
/// chordal graph on which `tail` is a clique; the result is then a perfect
/// elimination order of `fill_in`.
EliminationOrder restricted_mcs(const FillInGraph& fill_in, const std::vector<int>& tail);

struct RestrictedOrder {
  EliminationOrder order;         // tail vertices last
  int treewidth;                  // of `order` on the clique-ified graph
  EliminationOrder unrestricted;  // order found on the clique-ified graph
  int unrestricted_treewidth;
};

/// Finds an order with the vertices of `tail` ranked last:
///   1. connect `tail` into a clique,
///   2. order the result (exhaustive search up to kExhaustiveLimit vertices,
///      otherwise `heuristic` followed by minimal_refinement),
///   3. build its fill-in graph,
///   4. relabel with restricted_mcs.
RestrictedOrder restricted_order_pipeline(const Graph& graph, const std::vector<int>& tail,
                                          Heuristic heuristic);

/// Copy of `graph` with `vertices` connected into a clique.
Graph cliquify(const Graph& graph, const std::vector<int>& vertices);

}  // namespace qbatch

#endif  // QBATCH_ORDERING_H
