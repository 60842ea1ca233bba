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

#include "qbatch/graph.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "qbatch/error.h"

namespace qbatch {

Graph::Graph(int n_vertices) {
  if (n_vertices < 0) {
    throw Error("vertex count must be non-negative");
  }
  adj_.resize(n_vertices);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= num_vertices()) {
    throw Error("vertex " + std::to_string(v) + " out of range [0, " +
                std::to_string(num_vertices()) + ")");
  }
}

bool Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    return false;
  }
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) {
    return false;
  }
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++n_edges_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it == au.end() || *it != v) {
    return false;
  }
  au.erase(it);
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --n_edges_;
  return true;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void Graph::make_clique(std::span<const int> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      add_edge(vertices[a], vertices[b]);
    }
  }
}

bool Graph::is_clique(std::span<const int> vertices) const {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] != vertices[b] && !has_edge(vertices[a], vertices[b])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(n_edges_);
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

namespace {

std::optional<long long> to_int(const std::string& token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

EdgeList parse_edge_list(std::string_view text) {
  EdgeList result;
  bool have_header = false;
  long long declared_edges = 0;
  long long seen_edges = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) {
      tok.push_back(t);
    }
    if (tok.empty() || tok[0] == "c") {
      continue;
    }
    auto vertex = [&](const std::string& t) {
      auto v = to_int(t);
      if (!v || *v < 0 || *v >= result.graph.num_vertices()) {
        throw ParseError(line_no, "bad vertex '" + t + "'");
      }
      return static_cast<int>(*v);
    };
    if (tok[0] == "p") {
      if (have_header || tok.size() != 3) {
        throw ParseError(line_no, "expected a single 'p <n_vertices> <n_edges>' line");
      }
      auto n = to_int(tok[1]);
      auto m = to_int(tok[2]);
      if (!n || !m || *n < 0 || *m < 0 || *n > 10'000'000) {
        throw ParseError(line_no, "bad header");
      }
      result.graph = Graph(static_cast<int>(*n));
      declared_edges = *m;
      have_header = true;
    } else if (!have_header) {
      throw ParseError(line_no, "missing 'p' header");
    } else if (tok[0] == "e") {
      if (tok.size() != 3) {
        throw ParseError(line_no, "expected 'e <u> <v>'");
      }
      result.graph.add_edge(vertex(tok[1]), vertex(tok[2]));
      ++seen_edges;
    } else if (tok[0] == "f") {
      std::vector<int> scope;
      for (std::size_t t = 1; t < tok.size(); ++t) {
        scope.push_back(vertex(tok[t]));
      }
      std::vector<int> sorted = scope;
      std::sort(sorted.begin(), sorted.end());
      if (scope.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParseError(line_no, "factor scope must list distinct vertices");
      }
      result.graph.make_clique(scope);
      result.scopes.push_back(std::move(scope));
    } else {
      throw ParseError(line_no, "unknown record '" + tok[0] + "'");
    }
  }
  if (!have_header) {
    throw ParseError(0, "missing 'p' header");
  }
  if (seen_edges != declared_edges) {
    throw ParseError(0, "header declares " + std::to_string(declared_edges) + " edges, found " +
                            std::to_string(seen_edges));
  }
  return result;
}

std::string write_edge_list(const Graph& graph) {
  std::ostringstream out;
  out << "p " << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
  for (auto [u, v] : graph.edges()) {
    out << "e " << u << ' ' << v << '\n';
  }
  return out.str();
}

}  // namespace qbatch
