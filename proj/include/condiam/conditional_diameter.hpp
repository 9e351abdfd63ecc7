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

// Conditional diameter D(G;s): the largest set distance d(V1,V2) over pairs
// of s-element vertex subsets.
//
// D(G;s) >= t exactly when the far graph at threshold t (u~v iff
// d(u,v) >= t) contains a balanced biclique K_{s,s}. The exact value is found
// by descending t from the upper bound n-2s+1; a greedy pass first supplies a
// lower bound so that only thresholds above it need the exact search.

#ifndef CONDIAM_CONDITIONAL_DIAMETER_HPP_
#define CONDIAM_CONDITIONAL_DIAMETER_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "condiam/graph.hpp"

namespace condiam {

struct SubsetPairWitness {
  std::size_t s = 0;
  std::vector<Vertex> first;   // V1, ascending
  std::vector<Vertex> second;  // V2, ascending
  std::uint64_t value = 0;     // d(V1, V2)

  friend bool operator==(const SubsetPairWitness&,
                         const SubsetPairWitness&) = default;
};

// Two disjoint s-sets with every cross pair adjacent.
struct Biclique {
  std::vector<Vertex> first;
  std::vector<Vertex> second;

  friend bool operator==(const Biclique&, const Biclique&) = default;
};

struct ConditionalDiameter {
  std::uint64_t value = 0;
  std::optional<SubsetPairWitness> witness;
};

inline std::uint64_t condiam_upper_bound(std::int64_t n, std::int64_t s) {
  if (n < 0 || s < 1) {
    throw std::invalid_argument("condiam_upper_bound: need n >= 0 and s >= 1");
  }
  return static_cast<std::uint64_t>(std::max<std::int64_t>(n - 2 * s + 1, 0));
}

// Minimum distance over V1 x V2; zero when the sets share a vertex.
inline std::uint64_t set_distance(const Graph& g, std::span<const Vertex> v1,
                                  std::span<const Vertex> v2) {
  if (v1.empty() || v2.empty()) {
    throw GraphError("set_distance: vertex sets must be nonempty");
  }
  for (Vertex v : v1) g.CheckVertex(v);
  for (Vertex v : v2) g.CheckVertex(v);
  RequireConnected(g, "set_distance");
  // Multi-source BFS from V1.
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  for (Vertex v : v1) {
    if (dist[v] != 0) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = static_cast<Distance>(dist[u] + 1);
        queue.push_back(w);
      }
    }
  }
  Distance best = kUnreachable;
  for (Vertex v : v2) best = std::min(best, dist[v]);
  return best;
}

inline Graph far_graph(const Graph& g, std::uint64_t t) {
  if (t < 1) throw std::invalid_argument("far_graph: threshold must be >= 1");
  RequireConnected(g, "far_graph");
  const DistanceMatrix dm(g);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (dm(u, v) >= t) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(g.order(), edges);
}

namespace condiam_detail {

// Adjacency rows as packed bitsets.
class BitRows {
 public:
  BitRows(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_) {}

  static BitRows FromGraph(const Graph& f) {
    BitRows r(f.order());
    for (Vertex u = 0; u < f.order(); ++u) {
      for (Vertex v : f.neighbors(u)) r.Set(u, v);
    }
    return r;
  }

  static BitRows Far(const DistanceMatrix& dm, std::uint64_t t) {
    BitRows r(dm.order());
    for (Vertex u = 0; u < dm.order(); ++u) {
      for (Vertex v = 0; v < dm.order(); ++v) {
        if (u != v && dm(u, v) >= t) r.Set(u, v);
      }
    }
    return r;
  }

  void Set(Vertex u, Vertex v) {
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }
  bool Test(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1;
  }
  std::span<const std::uint64_t> Row(Vertex u) const {
    return std::span<const std::uint64_t>(bits_).subspan(u * words_, words_);
  }
  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

inline std::size_t Popcount(std::span<const std::uint64_t> set) {
  std::size_t c = 0;
  for (auto w : set) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

// Exact branch-and-bound. The first side grows in ascending id order, the
// second side is the common neighborhood restricted to ids above the first
// side's minimum, so the first witness found is the lexicographically least.
class BicliqueSearch {
 public:
  BicliqueSearch(const BitRows& rows, std::size_t s) : rows_(rows), s_(s) {}

  std::optional<Biclique> Run() {
    const std::size_t n = rows_.order();
    if (s_ == 0 || n < 2 * s_) return std::nullopt;
    chosen_.clear();
    std::vector<std::uint64_t> all(rows_.words(), ~std::uint64_t{0});
    if (n % 64 != 0) all.back() = (std::uint64_t{1} << (n % 64)) - 1;
    if (Grow(0, all)) return result_;
    return std::nullopt;
  }

 private:
  bool Grow(Vertex start, const std::vector<std::uint64_t>& common) {
    const std::size_t n = rows_.order();
    if (chosen_.size() == s_) {
      result_.first = chosen_;
      result_.second.clear();
      for (Vertex v = 0; v < n && result_.second.size() < s_; ++v) {
        if ((common[v / 64] >> (v % 64)) & 1) result_.second.push_back(v);
      }
      return true;
    }
    const std::size_t need = s_ - chosen_.size();
    std::vector<std::uint64_t> next(common.size());
    for (Vertex v = start; v + need <= n; ++v) {
      const auto row = rows_.Row(v);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] = common[w] & row[w];
      if (chosen_.empty()) {
        // Second side lives strictly above the first side's minimum.
        for (Vertex x = 0; x <= v; ++x) {
          next[x / 64] &= ~(std::uint64_t{1} << (x % 64));
        }
      }
      if (Popcount(next) < s_) continue;
      chosen_.push_back(v);
      if (Grow(v + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const BitRows& rows_;
  std::size_t s_;
  std::vector<Vertex> chosen_;
  Biclique result_;
};

// Greedy feasibility probe: seed each vertex, then repeatedly add the vertex
// that keeps the largest common neighborhood. Success proves feasibility;
// failure proves nothing.
inline bool GreedyBiclique(const BitRows& rows, std::size_t s) {
  const std::size_t n = rows.order();
  if (s == 0) return true;
  if (n < 2 * s) return false;
  std::vector<std::uint64_t> common(rows.words());
  std::vector<std::uint64_t> trial(rows.words());
  std::vector<bool> in_side(n);
  for (Vertex seed = 0; seed < n; ++seed) {
    const auto row = rows.Row(seed);
    std::copy(row.begin(), row.end(), common.begin());
    std::fill(in_side.begin(), in_side.end(), false);
    in_side[seed] = true;
    std::size_t size = 1;
    while (size < s && Popcount(common) >= s) {
      std::size_t best_count = 0;
      std::optional<Vertex> best;
      for (Vertex u = 0; u < n; ++u) {
        if (in_side[u]) continue;
        const auto ur = rows.Row(u);
        for (std::size_t w = 0; w < trial.size(); ++w) trial[w] = common[w] & ur[w];
        const std::size_t c = Popcount(trial);
        if (!best || c > best_count) {
          best = u;
          best_count = c;
        }
      }
      if (!best || best_count < s) break;
      const auto br = rows.Row(*best);
      for (std::size_t w = 0; w < common.size(); ++w) common[w] &= br[w];
      in_side[*best] = true;
      ++size;
    }
    if (size == s && Popcount(common) >= s) return true;
  }
  return false;
}

inline void CheckCardinality(std::uint64_t s) {
  if (s < 1) throw std::invalid_argument("subset cardinality s must be >= 1");
}

}  // namespace condiam_detail

// Lexicographically least K_{s,s} in f (first side compared first), if any.
inline std::optional<Biclique> balanced_biclique_at_least(const Graph& f,
                                                          std::size_t s) {
  if (s == 0) return std::nullopt;
  const auto rows = condiam_detail::BitRows::FromGraph(f);
  return condiam_detail::BicliqueSearch(rows, s).Run();
}

// Decides D(G;s) >= t from a precomputed distance matrix.
inline bool conditional_diameter_at_least(const DistanceMatrix& dm,
                                          std::size_t s, std::uint64_t t) {
  condiam_detail::CheckCardinality(s);
  if (t == 0) return true;
  if (dm.order() < 2 * s) return false;
  if (t > condiam_upper_bound(static_cast<std::int64_t>(dm.order()),
                              static_cast<std::int64_t>(s))) {
    return false;
  }
  const auto rows = condiam_detail::BitRows::Far(dm, t);
  if (condiam_detail::GreedyBiclique(rows, s)) return true;
  return condiam_detail::BicliqueSearch(rows, s).Run().has_value();
}

inline bool conditional_diameter_at_least(const Graph& g, std::size_t s,
                                          std::uint64_t t) {
  RequireConnected(g, "conditional_diameter");
  return conditional_diameter_at_least(DistanceMatrix(g), s, t);
}

// True iff D(G;s) == target, without computing the full descent.
inline bool conditional_diameter_equals(const DistanceMatrix& dm,
                                        std::size_t s, std::uint64_t target) {
  return conditional_diameter_at_least(dm, s, target) &&
         !conditional_diameter_at_least(dm, s, target + 1);
}

inline ConditionalDiameter conditional_diameter(const Graph& g, std::size_t s) {
  using namespace condiam_detail;
  CheckCardinality(s);
  RequireConnected(g, "conditional_diameter");
  const std::size_t n = g.order();
  if (n < 2 * s) return {};
  const DistanceMatrix dm(g);
  const std::uint64_t upper = condiam_upper_bound(
      static_cast<std::int64_t>(n), static_cast<std::int64_t>(s));

  std::uint64_t lower = 0;
  for (std::uint64_t t = upper; t >= 1; --t) {
    if (GreedyBiclique(BitRows::Far(dm, t), s)) {
      lower = t;
      break;
    }
  }

  for (std::uint64_t t = upper; t >= std::max<std::uint64_t>(lower, 1); --t) {
    const auto rows = BitRows::Far(dm, t);
    if (auto hit = BicliqueSearch(rows, s).Run()) {
      SubsetPairWitness w;
      w.s = s;
      w.first = std::move(hit->first);
      w.second = std::move(hit->second);
      w.value = set_distance(g, w.first, w.second);
      return {t, std::move(w)};
    }
  }
  // Unreachable for connected graphs with n >= 2s: t = 1 always admits K_{s,s}.
  throw std::logic_error("conditional_diameter: no feasible threshold");
}

}  // namespace condiam

#endif  // CONDIAM_CONDITIONAL_DIAMETER_HPP_
