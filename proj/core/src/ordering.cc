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

#include "qbatch/ordering.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <sstream>

#include "qbatch/error.h"

namespace qbatch {

EliminationOrder::EliminationOrder(std::vector<int> sequence) : sequence_(std::move(sequence)) {
  const int n = static_cast<int>(sequence_.size());
  rank_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = sequence_[i];
    if (v < 0 || v >= n || rank_[v] != 0) {
      throw Error("elimination order is not a permutation of 0.." + std::to_string(n - 1));
    }
    rank_[v] = i + 1;
  }
}

std::string format_order(const EliminationOrder& order) {
  std::ostringstream out;
  for (int i = 0; i < order.size(); ++i) {
    out << (i ? " " : "") << order.sequence()[i];
  }
  return out.str();
}

EliminationOrder parse_order(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> seq;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw ParseError(0, "bad vertex id '" + token + "' in order");
    }
    seq.push_back(v);
  }
  return EliminationOrder(std::move(seq));
}

std::string_view heuristic_name(Heuristic h) noexcept {
  return h == Heuristic::MinFill ? "min_fill" : "min_degree";
}

Heuristic heuristic_from_name(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "min_fill") {
    return Heuristic::MinFill;
  }
  if (key == "min_degree") {
    return Heuristic::MinDegree;
  }
  throw Error("unknown heuristic '" + std::string(name) + "'");
}

namespace {

void check_order_matches(const Graph& graph, const EliminationOrder& order) {
  if (order.size() != graph.num_vertices()) {
    throw Error("order covers " + std::to_string(order.size()) + " vertices, graph has " +
                std::to_string(graph.num_vertices()));
  }
}

// Graph being eliminated vertex by vertex. Dense adjacency matrix plus
// unsorted neighbour lists of the vertices still present.
class EliminationGraph {
 public:
  explicit EliminationGraph(const Graph& g)
      : n_(g.num_vertices()), adj_(static_cast<std::size_t>(n_) * n_, 0), nb_(n_) {
    for (int v = 0; v < n_; ++v) {
      nb_[v] = g.neighbors(v);
      for (int u : nb_[v]) {
        adj_[index(u, v)] = 1;
      }
    }
  }

  const std::vector<int>& neighbors(int v) const { return nb_[v]; }

  int fill_count(int v) const {
    const auto& nv = nb_[v];
    int fill = 0;
    for (std::size_t a = 0; a < nv.size(); ++a) {
      for (std::size_t b = a + 1; b < nv.size(); ++b) {
        fill += adj_[index(nv[a], nv[b])] ? 0 : 1;
      }
    }
    return fill;
  }

  void eliminate(int v) {
    const std::vector<int> nv = nb_[v];
    for (std::size_t a = 0; a < nv.size(); ++a) {
      for (std::size_t b = a + 1; b < nv.size(); ++b) {
        int x = nv[a], y = nv[b];
        if (!adj_[index(x, y)]) {
          adj_[index(x, y)] = adj_[index(y, x)] = 1;
          nb_[x].push_back(y);
          nb_[y].push_back(x);
        }
      }
    }
    for (int u : nv) {
      auto& nu = nb_[u];
      nu.erase(std::find(nu.begin(), nu.end(), v));
      adj_[index(u, v)] = adj_[index(v, u)] = 0;
    }
    nb_[v].clear();
  }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

  int n_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> nb_;
};

using Mask = std::uint32_t;

struct ExhaustiveSearch {
  int n;
  Mask all;
  std::vector<int> memo;  // best width seen on reaching each eliminated set
  int best_width;
  std::vector<int> best_sequence;
  std::vector<int> current;

  void dfs(const std::vector<Mask>& adj, Mask eliminated, int width) {
    if (eliminated == all) {
      if (width < best_width) {
        best_width = width;
        best_sequence = current;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      const Mask bit = Mask{1} << v;
      if (eliminated & bit) {
        continue;
      }
      const Mask nbrs = adj[v] & ~eliminated;
      const int w = std::max(width, std::popcount(nbrs));
      if (w >= best_width) {
        continue;
      }
      const Mask next = eliminated | bit;
      if (w >= memo[next]) {
        continue;
      }
      memo[next] = w;
      std::vector<Mask> updated = adj;
      for (int u = 0; u < n; ++u) {
        if (nbrs & (Mask{1} << u)) {
          updated[u] |= nbrs & ~(Mask{1} << u);
        }
      }
      current.push_back(v);
      dfs(updated, next, w);
      current.pop_back();
    }
  }
};

EliminationOrder mcs_with_tail(const Graph& graph, const std::vector<int>& tail) {
  const int n = graph.num_vertices();
  std::vector<int> sequence(n, -1);
  std::vector<int> cardinality(n, 0);
  std::vector<bool> labeled(n, false);
  std::vector<int> seeds = tail;
  std::sort(seeds.begin(), seeds.end());

  auto label = [&](int v, int rank) {
    labeled[v] = true;
    sequence[rank - 1] = v;
    for (int w : graph.neighbors(v)) {
      if (!labeled[w]) {
        ++cardinality[w];
      }
    }
  };

  int rank = n;
  for (int v : seeds) {
    label(v, rank--);
  }
  for (; rank >= 1; --rank) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!labeled[v] && (pick < 0 || cardinality[v] > cardinality[pick])) {
        pick = v;
      }
    }
    label(pick, rank);
  }
  return EliminationOrder(std::move(sequence));
}

void check_tail(const Graph& graph, const std::vector<int>& tail) {
  std::vector<bool> seen(graph.num_vertices(), false);
  for (int v : tail) {
    if (v < 0 || v >= graph.num_vertices()) {
      throw Error("tail vertex " + std::to_string(v) + " out of range");
    }
    if (seen[v]) {
      throw Error("tail vertex " + std::to_string(v) + " listed twice");
    }
    seen[v] = true;
  }
}

}  // namespace

EliminationOrder greedy_order(const Graph& graph, Heuristic heuristic) {
  const int n = graph.num_vertices();
  if (n == 0) {
    throw Error("cannot order an empty graph");
  }
  EliminationGraph work(graph);
  std::vector<bool> alive(n, true);
  std::vector<int> sequence;
  sequence.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    long long pick_score = 0;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) {
        continue;
      }
      long long score = heuristic == Heuristic::MinFill
                            ? work.fill_count(v)
                            : static_cast<long long>(work.neighbors(v).size());
      if (pick < 0 || score < pick_score) {
        pick = v;
        pick_score = score;
      }
    }
    work.eliminate(pick);
    alive[pick] = false;
    sequence.push_back(pick);
  }
  return EliminationOrder(std::move(sequence));
}

EliminationOrder exhaustive_order(const Graph& graph) {
  const int n = graph.num_vertices();
  if (n > kExhaustiveLimit) {
    throw Error("exhaustive ordering supports at most " + std::to_string(kExhaustiveLimit) +
                " vertices, graph has " + std::to_string(n));
  }
  if (n == 0) {
    return EliminationOrder();
  }
  EliminationOrder seed = greedy_order(graph, Heuristic::MinFill);

  ExhaustiveSearch search;
  search.n = n;
  search.all = (Mask{1} << n) - 1;
  search.memo.assign(std::size_t{1} << n, n + 1);
  search.best_width = treewidth_of_order(graph, seed);
  search.best_sequence = seed.sequence();

  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : graph.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  search.dfs(adj, 0, 0);
  return EliminationOrder(search.best_sequence);
}

FillInGraph build_chordal_graph(const Graph& graph, const EliminationOrder& order) {
  check_order_matches(graph, order);
  FillInGraph result{graph};
  Graph& filled = result.graph;
  for (int i = 1; i <= order.size(); ++i) {
    int v = order.vertex_at(i);
    std::vector<int> higher;
    for (int w : filled.neighbors(v)) {
      if (order.rank_of(w) > i) {
        higher.push_back(w);
      }
    }
    filled.make_clique(higher);
  }
  return result;
}

std::vector<int> elimination_clique_sizes(const Graph& graph, const EliminationOrder& order) {
  FillInGraph filled = build_chordal_graph(graph, order);
  std::vector<int> sizes(order.size());
  for (int i = 1; i <= order.size(); ++i) {
    int v = order.vertex_at(i);
    int higher = 0;
    for (int w : filled.graph.neighbors(v)) {
      higher += order.rank_of(w) > i ? 1 : 0;
    }
    sizes[i - 1] = higher + 1;
  }
  return sizes;
}

int treewidth_of_order(const Graph& graph, const EliminationOrder& order) {
  std::vector<int> sizes = elimination_clique_sizes(graph, order);
  if (sizes.empty()) {
    return 0;
  }
  return *std::max_element(sizes.begin(), sizes.end()) - 1;
}

bool is_perfect_elimination_order(const Graph& graph, const EliminationOrder& order) {
  return build_chordal_graph(graph, order).graph.num_edges() == graph.num_edges();
}

bool is_chordal(const Graph& graph) {
  return is_perfect_elimination_order(graph, mcs_with_tail(graph, {}));
}

EliminationOrder restricted_mcs(const FillInGraph& fill_in, const std::vector<int>& tail) {
  const Graph& h = fill_in.graph;
  check_tail(h, tail);
  if (!h.is_clique(tail)) {
    throw Error("tail vertices do not form a clique");
  }
  if (!is_chordal(h)) {
    throw Error("graph is not chordal");
  }
  return mcs_with_tail(h, tail);
}

FillInGraph minimal_triangulation(const Graph& graph, FillInGraph fill_in) {
  Graph& h = fill_in.graph;
  if (h.num_vertices() != graph.num_vertices()) {
    throw Error("triangulation does not match the graph");
  }
  std::vector<std::pair<int, int>> fill;
  for (auto [u, v] : h.edges()) {
    if (!graph.has_edge(u, v)) {
      fill.emplace_back(u, v);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : fill) {
      std::vector<int> common;
      std::set_intersection(h.neighbors(u).begin(), h.neighbors(u).end(), h.neighbors(v).begin(),
                            h.neighbors(v).end(), std::back_inserter(common));
      if (h.is_clique(common)) {
        h.remove_edge(u, v);
        changed = true;
      } else {
        kept.emplace_back(u, v);
      }
    }
    fill = std::move(kept);
  }
  return fill_in;
}

EliminationOrder minimal_refinement(const Graph& graph, const EliminationOrder& order) {
  FillInGraph minimal = minimal_triangulation(graph, build_chordal_graph(graph, order));
  return mcs_with_tail(minimal.graph, {});
}

Graph cliquify(const Graph& graph, const std::vector<int>& vertices) {
  Graph out = graph;
  out.make_clique(vertices);
  return out;
}

RestrictedOrder restricted_order_pipeline(const Graph& graph, const std::vector<int>& tail,
                                          Heuristic heuristic) {
  check_tail(graph, tail);
  Graph closed = cliquify(graph, tail);
  EliminationOrder unrestricted = closed.num_vertices() <= kExhaustiveLimit
                                      ? exhaustive_order(closed)
                                      : minimal_refinement(closed, greedy_order(closed, heuristic));
  FillInGraph filled = build_chordal_graph(closed, unrestricted);
  EliminationOrder order = restricted_mcs(filled, tail);
  int tw = treewidth_of_order(closed, order);
  int tw_unrestricted = treewidth_of_order(closed, unrestricted);
  return {std::move(order), tw, std::move(unrestricted), tw_unrestricted};
}

}  // namespace qbatch
