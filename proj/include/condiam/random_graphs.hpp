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

#ifndef CONDIAM_RANDOM_GRAPHS_HPP_
#define CONDIAM_RANDOM_GRAPHS_HPP_

#include <random>
#include <set>
#include <vector>

#include "condiam/graph.hpp"

namespace condiam {

using Rng = std::mt19937_64;

// Uniform labelled tree via a random Pruefer sequence.
inline Graph random_tree(std::size_t n, Rng& rng) {
  if (n <= 1) return Graph::FromEdges(n, {});
  if (n == 2) return Graph::FromEdges(2, {{0, 1}});
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  for (Vertex c : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph::FromEdges(n, edges);
}

// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  auto edges = random_tree(n, rng).edges();
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace condiam

#endif  // CONDIAM_RANDOM_GRAPHS_HPP_
