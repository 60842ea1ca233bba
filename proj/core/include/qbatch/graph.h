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

#ifndef QBATCH_GRAPH_H
#define QBATCH_GRAPH_H

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qbatch {

/// Undirected simple graph over vertices 0..n-1 with sorted adjacency lists.
/// Self-loops are never stored.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n_vertices);

  int num_vertices() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const noexcept { return n_edges_; }

  /// Returns true if the edge was new. Self-loops are ignored (false).
  bool add_edge(int u, int v);
  /// Returns true if the edge existed.
  bool remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  /// Connects every pair of `vertices`.
  void make_clique(std::span<const int> vertices);
  bool is_clique(std::span<const int> vertices) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  std::size_t n_edges_ = 0;
};

/// Contents of an edge-list file: the graph plus optional factor scopes.
struct EdgeList {
  Graph graph;
  /// One entry per `f` line; empty when the file has none.
  std::vector<std::vector<int>> scopes;
};

/// Text format, 0-based vertex ids:
///
///     c comment
///     p <n_vertices> <n_edges>
///     e <u> <v>
///     f <v1> <v2> ...      (optional factor scope; its clique joins the graph)
///
/// The edge count in the `p` line must match the number of `e` lines.
EdgeList parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& graph);

}  // namespace qbatch

#endif  // QBATCH_GRAPH_H
