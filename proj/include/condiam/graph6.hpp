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

// graph6 codec.
//
// Layout: N(n) followed by the upper triangle of the adjacency matrix in
// column-major order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed six bits per
// byte (most significant first), zero padded, each group offset by 63.
// N(n) is chr(n+63) for n < 63 and chr(126) followed by three 6-bit groups
// for 63 <= n <= 258047. The 8-byte form for larger n is not supported.

#ifndef CONDIAM_GRAPH6_HPP_
#define CONDIAM_GRAPH6_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "condiam/graph.hpp"

namespace condiam {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kGraph6MaxOrder = 258047;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace graph6_detail {

inline constexpr int kOffset = 63;

inline int Sextet(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw Graph6Error("graph6: byte " + std::to_string(c) + " at offset " +
                      std::to_string(pos) + " is outside [63,126]");
  }
  return c - kOffset;
}

inline std::size_t BodyLength(std::size_t n) {
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

}  // namespace graph6_detail

inline Graph parse_graph6(std::string_view text) {
  using namespace graph6_detail;
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Graph6Error("graph6: empty record");

  std::size_t n = 0;
  std::size_t pos = 0;
  const int first = Sextet(text, 0);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
    pos = 1;
  } else {
    if (text.size() < 4) throw Graph6Error("graph6: truncated order field");
    if (Sextet(text, 1) == 63) {
      throw Graph6Error("graph6: orders above " +
                        std::to_string(kGraph6MaxOrder) + " are not supported");
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      n = (n << 6) | static_cast<std::size_t>(Sextet(text, k));
    }
    pos = 4;
  }

  const std::size_t body = BodyLength(n);
  if (text.size() - pos < body) {
    throw Graph6Error("graph6: truncated record, expected " +
                      std::to_string(body) + " body bytes for n=" +
                      std::to_string(n) + ", found " +
                      std::to_string(text.size() - pos));
  }
  if (text.size() - pos > body) {
    throw Graph6Error("graph6: trailing bytes after record for n=" +
                      std::to_string(n));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  const std::size_t total_bits = n > 0 ? n * (n - 1) / 2 : 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t k = 0; k < body; ++k) {
    const int group = Sextet(text, pos + k);
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (group >> b) & 1;
      if (bit >= total_bits) {
        if (set) throw Graph6Error("graph6: nonzero padding bits");
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::FromEdges(n, edges);
}

inline std::string emit_graph6(const Graph& g) {
  using namespace graph6_detail;
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Graph6Error("graph6: order " + std::to_string(n) +
                      " exceeds supported maximum " +
                      std::to_string(kGraph6MaxOrder));
  }
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kOffset));
    }
  }
  const std::size_t header = out.size();
  out.resize(header + BodyLength(n), static_cast<char>(kOffset));
  for (const auto& [i, j] : g.edges()) {
    const std::size_t bit = static_cast<std::size_t>(j) * (j - 1) / 2 + i;
    out[header + bit / 6] =
        static_cast<char>(out[header + bit / 6] + (1 << (5 - bit % 6)));
  }
  return out;
}

}  // namespace condiam

#endif  // CONDIAM_GRAPH6_HPP_
