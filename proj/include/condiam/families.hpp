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

// Path, cycle and the spine-with-pendants trees T^i_n, T^{i,j}_n, T^{i(2)}_n.
//
// Labelling: the spine x_1..x_k gets ids 0..k-1 in order (x_i is id i-1);
// pendant vertices follow with the highest ids.

#ifndef CONDIAM_FAMILIES_HPP_
#define CONDIAM_FAMILIES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "condiam/graph.hpp"
#include "condiam/invariants.hpp"

namespace condiam {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FamilyKind { kPath, kCycle, kTreeSingle, kTreeDouble, kTreeTail2 };

struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::size_t n = 1;
  std::size_t i = 0;  // 1-based spine index, T families only
  std::size_t j = 0;  // second spine index, kTreeDouble only
};

namespace families_detail {

inline std::vector<Edge> Spine(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < k; ++v) edges.emplace_back(v - 1, v);
  return edges;
}

[[noreturn]] inline void Fail(const std::string& what) { throw FamilyError(what); }

}  // namespace families_detail

inline Graph path_graph(std::size_t n) {
  if (n < 1) families_detail::Fail("path_graph: n must be >= 1");
  return Graph::FromEdges(n, families_detail::Spine(n));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) families_detail::Fail("cycle_graph: n must be >= 3");
  auto edges = families_detail::Spine(n);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::FromEdges(n, edges);
}

// T^i_n: spine x_1..x_{n-1} plus a pendant (id n-1) at x_i.
inline Graph tree_single(std::size_t n, std::size_t i) {
  if (n < 3 || i < 1 || i > n - 1) {
    families_detail::Fail("tree_single: need n >= 3 and 1 <= i <= n-1, got n=" +
                          std::to_string(n) + " i=" + std::to_string(i));
  }
  auto edges = families_detail::Spine(n - 1);
  edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(n - 1));
  return Graph::FromEdges(n, edges);
}

// T^{i,j}_n: spine x_1..x_{n-2}, pendant n-2 at x_i and pendant n-1 at x_j.
// i == j gives two pendants on the same spine vertex.
inline Graph tree_double(std::size_t n, std::size_t i, std::size_t j) {
  if (n < 4 || i < 1 || i > j || j > n - 2) {
    families_detail::Fail(
        "tree_double: need n >= 4 and 1 <= i <= j <= n-2, got n=" +
        std::to_string(n) + " i=" + std::to_string(i) + " j=" +
        std::to_string(j));
  }
  auto edges = families_detail::Spine(n - 2);
  edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(n - 2));
  edges.emplace_back(static_cast<Vertex>(j - 1), static_cast<Vertex>(n - 1));
  return Graph::FromEdges(n, edges);
}

// T^{i(2)}_n: spine x_1..x_{n-2} plus the tail x_i - w1 - w2 (ids n-2, n-1).
inline Graph tree_tail2(std::size_t n, std::size_t i) {
  if (n < 4 || i < 1 || i > n - 2) {
    families_detail::Fail("tree_tail2: need n >= 4 and 1 <= i <= n-2, got n=" +
                          std::to_string(n) + " i=" + std::to_string(i));
  }
  auto edges = families_detail::Spine(n - 2);
  edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(n - 2));
  edges.emplace_back(static_cast<Vertex>(n - 2), static_cast<Vertex>(n - 1));
  return Graph::FromEdges(n, edges);
}

inline Graph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kPath:
      return path_graph(spec.n);
    case FamilyKind::kCycle:
      return cycle_graph(spec.n);
    case FamilyKind::kTreeSingle:
      return tree_single(spec.n, spec.i);
    case FamilyKind::kTreeDouble:
      return tree_double(spec.n, spec.i, spec.j);
    case FamilyKind::kTreeTail2:
      return tree_tail2(spec.n, spec.i);
  }
  families_detail::Fail("unknown family kind");
}

// Smallest n for which the extremal statement at offset c is asserted:
// D(G;s) = n-2s-c with c in {-1, 0, 1}.
inline std::size_t extremal_min_order(int c, std::size_t s) {
  switch (c) {
    case -1:
      return 2 * s;
    case 0:
      return 2 * s + 3;
    case 1:
      return 2 * s + 5;
    default:
      families_detail::Fail("offset c must be -1, 0 or 1, got " +
                            std::to_string(c));
  }
}

inline void check_extremal_hypothesis(int c, std::size_t s, std::size_t n) {
  if (s < 1) families_detail::Fail("s must be >= 1");
  const std::size_t min_n = extremal_min_order(c, s);
  if (n < min_n) {
    families_detail::Fail("c=" + std::to_string(c) + ", s=" +
                          std::to_string(s) + " requires n >= " +
                          std::to_string(min_n) + ", got n=" +
                          std::to_string(n));
  }
}

// The graph claimed to maximize W among connected graphs with
// D(G;s) = n-2s-c: P_n, T^{s+1}_n or T^{s+1,n-s-2}_n.
inline Graph claimed_extremal(int c, std::size_t s, std::size_t n) {
  check_extremal_hypothesis(c, s, n);
  if (c == -1) return path_graph(n);
  if (c == 0) return tree_single(n, s + 1);
  return tree_double(n, s + 1, n - s - 2);
}

using Rational = boost::rational<std::int64_t>;

// n^2/2 - (s + 3/2) n + s^2 + 7s, evaluated exactly.
inline Rational paper_difference_poly(std::int64_t n, std::int64_t s) {
  const Rational rn(n);
  const Rational rs(s);
  return rn * rn / 2 - (rs + Rational(3, 2)) * rn + rs * rs + 7 * rs;
}

// W(T^{s+1,n-s-2}_n) - W(T^{(s+2)(2)}_n) from the two constructed trees.
inline std::int64_t construction_difference(std::size_t n, std::size_t s) {
  if (s < 1 || n < 2 * s + 5) {
    families_detail::Fail("construction_difference: need s >= 1 and n >= 2s+5");
  }
  const auto doubled = wiener(tree_double(n, s + 1, n - s - 2));
  const auto tailed = wiener(tree_tail2(n, s + 2));
  return static_cast<std::int64_t>(doubled) - static_cast<std::int64_t>(tailed);
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace condiam

#endif  // CONDIAM_FAMILIES_HPP_
