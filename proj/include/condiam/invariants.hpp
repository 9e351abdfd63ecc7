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

#ifndef CONDIAM_INVARIANTS_HPP_
#define CONDIAM_INVARIANTS_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "condiam/graph.hpp"

namespace condiam {

// Distance-based invariants. All of them reject disconnected input instead
// of reporting an infinite value.

// Sum of distances from u to every other vertex, from one BFS.
inline std::uint64_t transmission(const Graph& g, Vertex u) {
  const auto dist = bfs_distances(g, u);
  std::uint64_t total = 0;
  for (Distance d : dist) {
    if (d == kUnreachable) {
      throw GraphError("transmission requires a connected graph");
    }
    total += d;
  }
  return total;
}

inline std::uint64_t wiener(const Graph& g) {
  std::uint64_t twice = 0;
  for (Vertex u = 0; u < g.order(); ++u) twice += transmission(g, u);
  return twice / 2;
}

inline std::uint64_t eccentricity(const Graph& g, Vertex u) {
  const auto dist = bfs_distances(g, u);
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) {
    throw GraphError("eccentricity requires a connected graph");
  }
  return *std::max_element(dist.begin(), dist.end());
}

inline std::uint64_t diameter(const Graph& g) {
  if (g.order() == 0) throw GraphError("diameter of the empty graph");
  std::uint64_t best = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    best = std::max(best, eccentricity(g, u));
  }
  return best;
}

// Transmission of the j-th vertex (1-based) of the path on n vertices:
// (j-1)j/2 to the left plus (n-j)(n-j+1)/2 to the right.
inline std::uint64_t path_transmission(std::uint64_t n, std::uint64_t j) {
  if (j < 1 || j > n) {
    throw std::out_of_range("path_transmission: position " +
                            std::to_string(j) + " outside [1," +
                            std::to_string(n) + "]");
  }
  return (j - 1) * j / 2 + (n - j) * (n - j + 1) / 2;
}

struct InvariantReport {
  std::size_t n = 0;
  std::uint64_t wiener = 0;
  std::uint64_t diameter = 0;
  std::vector<std::uint64_t> transmissions;
};

inline InvariantReport invariant_report(const Graph& g) {
  RequireConnected(g, "invariant_report");
  InvariantReport r;
  r.n = g.order();
  r.transmissions.reserve(g.order());
  std::uint64_t twice = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    r.transmissions.push_back(transmission(g, u));
    twice += r.transmissions.back();
    r.diameter = std::max(r.diameter, eccentricity(g, u));
  }
  r.wiener = twice / 2;
  return r;
}

}  // namespace condiam

#endif  // CONDIAM_INVARIANTS_HPP_
