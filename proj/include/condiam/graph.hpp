// Copyright 2026 The condiam Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONDIAM_GRAPH_HPP_
#define CONDIAM_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace condiam {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Raised for structural misuse: loops, bad ids, missing or duplicate edges.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple undirected graph on vertex ids 0..n-1.
//
// Neighbor lists are kept sorted, so two graphs with the same labelled edge
// set compare equal with operator==.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate edges (in either
  // orientation) are merged; loops and out-of-range ids throw GraphError.
  static Graph FromEdges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adj_.resize(n);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw GraphError("edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") has an id outside [0," +
                         std::to_string(n) + ")");
      }
      if (u == v) {
        throw GraphError("loop at vertex " + std::to_string(u));
      }
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& row : g.adj_) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
      g.m_ += row.size();
    }
    g.m_ /= 2;
    return g;
  }

  static Graph FromEdges(std::size_t n, std::initializer_list<Edge> edges) {
    return FromEdges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return m_; }

  std::span<const Vertex> neighbors(Vertex u) const {
    CheckVertex(u);
    return adj_[u];
  }
  std::size_t degree(Vertex u) const { return neighbors(u).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  // Edges (u,v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  void CheckVertex(Vertex u) const {
    if (u >= order()) {
      throw GraphError("vertex " + std::to_string(u) + " out of range [0," +
                       std::to_string(order()) + ")");
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::FromEdges(n, edges);
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::FromEdges(n, edges);
}

// Hop distance. UNREACHABLE is the maximal value and is never summed.
using Distance = std::uint16_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// Single-source BFS. Entries for vertices not reachable from `source` hold
// kUnreachable.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  g.CheckVertex(source);
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = static_cast<Distance>(dist[u] + 1);
        queue.push_back(v);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](Distance d) { return d == kUnreachable; });
}

// All-pairs hop counts, row-major n x n.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  explicit DistanceMatrix(const Graph& g) : n_(g.order()), d_(n_ * n_) {
    for (Vertex u = 0; u < n_; ++u) {
      const auto row = bfs_distances(g, u);
      std::copy(row.begin(), row.end(), d_.begin() + u * n_);
    }
  }

  std::size_t order() const { return n_; }

  Distance operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }

  std::span<const Distance> row(Vertex u) const {
    return std::span<const Distance>(d_).subspan(u * n_, n_);
  }

  bool all_finite() const {
    return std::find(d_.begin(), d_.end(), kUnreachable) == d_.end();
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  return DistanceMatrix(g);
}

inline void RequireConnected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw GraphError(std::string(what) + " requires a connected graph");
  }
}

// Edit operations used by the proof transformations. Each returns a fresh
// graph; the input is left untouched.

inline Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") not present");
  }
  auto edges = g.edges();
  const Edge key = std::minmax(u, v);
  edges.erase(std::find(edges.begin(), edges.end(), key));
  return Graph::FromEdges(g.order(), edges);
}

inline Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  g.CheckVertex(u);
  g.CheckVertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  if (g.has_edge(u, v)) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") already present");
  }
  auto edges = g.edges();
  edges.emplace_back(u, v);
  return Graph::FromEdges(g.order(), edges);
}

// Deletes u and renumbers every id above u down by one.
inline Graph remove_vertex(const Graph& g, Vertex u) {
  g.CheckVertex(u);
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (a == u || b == u) continue;
    edges.emplace_back(a > u ? a - 1 : a, b > u ? b - 1 : b);
  }
  return Graph::FromEdges(g.order() - 1, edges);
}

// Relabels so that new id perm[v] is assigned to old vertex v.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw GraphError("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  return Graph::FromEdges(g.order(), edges);
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

}  // namespace condiam

#endif  // CONDIAM_GRAPH_HPP_
