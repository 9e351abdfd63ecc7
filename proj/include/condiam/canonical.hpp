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

// Canonical labelling by partition refinement and individualization.
//
// The search tree is the usual one: refine an ordered partition to an
// equitable one, individualize each vertex of the first smallest
// non-singleton cell, recurse. Every leaf is a labelling; the canonical form
// is the leaf whose graph6 body is lexicographically largest. Leaves that
// reproduce an earlier code yield automorphisms, which prune siblings lying
// in the same orbit of the pointwise stabilizer of the current prefix.
// Exact, exponential in the worst case; intended for small graphs.

#ifndef CONDIAM_CANONICAL_HPP_
#define CONDIAM_CANONICAL_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "condiam/graph.hpp"
#include "condiam/graph6.hpp"

namespace condiam {

namespace canonical_detail {

using Cells = std::vector<std::vector<Vertex>>;

class Labeller {
 public:
  explicit Labeller(const Graph& g) : g_(g), n_(g.order()) {
    words_ = (n_ + 63) / 64;
    rows_.assign(n_ * words_, 0);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : g.neighbors(u)) rows_[u * words_ + v / 64] |= Bit(v);
    }
  }

  std::vector<Vertex> Run() {
    if (n_ == 0) return {};
    Cells root(1);
    root[0].resize(n_);
    std::iota(root[0].begin(), root[0].end(), Vertex{0});
    std::vector<Vertex> prefix;
    Visit(std::move(root), prefix);
    return best_lab_;
  }

 private:
  static std::uint64_t Bit(Vertex v) { return std::uint64_t{1} << (v % 64); }

  bool Adjacent(Vertex u, Vertex v) const {
    return (rows_[u * words_ + v / 64] & Bit(v)) != 0;
  }

  std::size_t CountInto(Vertex v, const std::vector<std::uint64_t>& mask) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      c += static_cast<std::size_t>(
          __builtin_popcountll(rows_[v * words_ + w] & mask[w]));
    }
    return c;
  }

  // Splits cells by neighbor counts into each splitter cell until stable.
  void Refine(Cells& cells) const {
    std::vector<std::uint64_t> mask(words_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t si = 0; si < cells.size(); ++si) {
        std::fill(mask.begin(), mask.end(), 0);
        for (Vertex v : cells[si]) mask[v / 64] |= Bit(v);
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
          auto& cell = cells[ci];
          if (cell.size() < 2) continue;
          std::vector<std::pair<std::size_t, Vertex>> keyed;
          keyed.reserve(cell.size());
          for (Vertex v : cell) keyed.emplace_back(CountInto(v, mask), v);
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) {
                             return a.first < b.first;
                           });
          if (keyed.front().first == keyed.back().first) continue;
          Cells pieces;
          for (std::size_t k = 0; k < keyed.size(); ++k) {
            if (k == 0 || keyed[k].first != keyed[k - 1].first) {
              pieces.emplace_back();
            }
            pieces.back().push_back(keyed[k].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci),
                       pieces.begin(), pieces.end());
          changed = true;
        }
      }
    }
  }

  std::string Code(const std::vector<Vertex>& lab) const {
    std::string code;
    code.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        code.push_back(Adjacent(lab[i], lab[j]) ? '1' : '0');
      }
    }
    return code;
  }

  void RecordAutomorphism(const std::vector<Vertex>& from,
                          const std::vector<Vertex>& to) {
    std::vector<Vertex> gamma(n_);
    for (std::size_t p = 0; p < n_; ++p) gamma[from[p]] = to[p];
    autos_.push_back(std::move(gamma));
  }

  void Leaf(const Cells& cells) {
    std::vector<Vertex> lab(n_);
    for (std::size_t p = 0; p < n_; ++p) lab[p] = cells[p][0];
    std::string code = Code(lab);
    if (first_lab_.empty()) {
      first_code_ = best_code_ = code;
      first_lab_ = best_lab_ = lab;
      return;
    }
    if (code == first_code_) {
      RecordAutomorphism(first_lab_, lab);
    } else if (code == best_code_) {
      RecordAutomorphism(best_lab_, lab);
    } else if (code > best_code_) {
      best_code_ = std::move(code);
      best_lab_ = std::move(lab);
    }
  }

  // Union-find orbit representative of v under automorphisms fixing prefix.
  bool SameOrbitAsTried(Vertex v, const std::vector<Vertex>& tried,
                        const std::vector<Vertex>& prefix) const {
    if (tried.empty() || autos_.empty()) return false;
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : autos_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (Vertex x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    const Vertex root = find(v);
    return std::any_of(tried.begin(), tried.end(),
                       [&](Vertex t) { return find(t) == root; });
  }

  void Visit(Cells cells, std::vector<Vertex>& prefix) {
    Refine(cells);
    if (cells.size() == n_) {
      Leaf(cells);
      return;
    }
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 &&
          (target == cells.size() || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }
    std::vector<Vertex> members = cells[target];
    std::sort(members.begin(), members.end());
    std::vector<Vertex> tried;
    for (Vertex v : members) {
      if (SameOrbitAsTried(v, tried, prefix)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex u : cells[c]) {
          if (u != v) rest.push_back(u);
        }
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      Visit(std::move(child), prefix);
      prefix.pop_back();
      tried.push_back(v);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::string first_code_;
  std::string best_code_;
  std::vector<Vertex> first_lab_;
  std::vector<Vertex> best_lab_;
  std::vector<std::vector<Vertex>> autos_;
};

}  // namespace canonical_detail

// lab[p] is the vertex placed at canonical position p.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
  return canonical_detail::Labeller(g).Run();
}

inline Graph canonical_form(const Graph& g) {
  const auto lab = canonical_labeling(g);
  std::vector<Vertex> perm(g.order());
  for (std::size_t p = 0; p < lab.size(); ++p) {
    perm[lab[p]] = static_cast<Vertex>(p);
  }
  return relabel(g, perm);
}

// Isomorphism-class identifier: graph6 of the canonical form.
inline std::string canonical_key(const Graph& g) {
  return emit_graph6(canonical_form(g));
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_key(a) == canonical_key(b);
}

}  // namespace condiam

#endif  // CONDIAM_CANONICAL_HPP_
