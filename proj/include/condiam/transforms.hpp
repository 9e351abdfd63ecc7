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

// Wiener-monotone graph edits: attaching and shifting pendant paths, the
// pendant-vertex identity, pruning a vertex to a pendant, non-bridge edge
// deletion and straightening a gated branch into a hanging path.

#ifndef CONDIAM_TRANSFORMS_HPP_
#define CONDIAM_TRANSFORMS_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "condiam/graph.hpp"
#include "condiam/invariants.hpp"

namespace condiam {

// Base graph with two paths of lengths k and l hanging from v.
struct ShiftSite {
  Graph host;
  Vertex v = 0;
  std::size_t k = 0;
  std::size_t l = 0;
};

// G_{k,l}. Path P = v v_1..v_k takes ids |host|..|host|+k-1, then
// Q = v u_1..u_l takes the next l ids.
inline Graph attach_two_paths(const ShiftSite& site) {
  const Graph& h = site.host;
  if (h.order() < 2) throw GraphError("attach_two_paths: host must be non-trivial");
  h.CheckVertex(site.v);
  RequireConnected(h, "attach_two_paths");
  auto edges = h.edges();
  Vertex next = static_cast<Vertex>(h.order());
  for (std::size_t len : {site.k, site.l}) {
    Vertex prev = site.v;
    for (std::size_t step = 0; step < len; ++step, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return Graph::FromEdges(h.order() + site.k + site.l, edges);
}

// G_{k,l} -> G_{k-1,l+1}; requires l >= k >= 1.
inline Graph lemma23_shift(const ShiftSite& site) {
  if (site.k == 0) throw GraphError("lemma23_shift: k must be >= 1");
  if (site.l < site.k) throw GraphError("lemma23_shift: need l >= k");
  ShiftSite shifted = site;
  --shifted.k;
  ++shifted.l;
  return attach_two_paths(shifted);
}

// Assumes g connected.
inline bool is_bridge(const Graph& g, Vertex u, Vertex v) {
  return !is_connected(remove_edge(g, u, v));
}

// W(G) == W(G-v) + D_{G-v}(u) + n - 1 for a pendant v with neighbor u.
inline bool pendant_identity_holds(const Graph& g, Vertex v) {
  g.CheckVertex(v);
  if (g.degree(v) != 1) {
    throw GraphError("pendant_identity_holds: vertex " + std::to_string(v) +
                     " is not pendant");
  }
  RequireConnected(g, "pendant_identity_holds");
  const Vertex u = g.neighbors(v)[0];
  const Graph rest = remove_vertex(g, v);
  const Vertex u_rest = u > v ? u - 1 : u;
  return wiener(g) ==
         wiener(rest) + transmission(rest, u_rest) + g.order() - 1;
}

// Neighbor of w farthest from the target set; smallest id on ties.
inline Vertex farthest_neighbor(const Graph& g, Vertex w,
                                std::span<const Vertex> targets) {
  g.CheckVertex(w);
  if (g.degree(w) == 0) throw GraphError("farthest_neighbor: isolated vertex");
  if (targets.empty()) throw GraphError("farthest_neighbor: empty target set");
  std::vector<Distance> best(g.order(), kUnreachable);
  for (Vertex t : targets) {
    const auto d = bfs_distances(g, t);
    for (Vertex x = 0; x < g.order(); ++x) best[x] = std::min(best[x], d[x]);
  }
  Vertex pick = g.neighbors(w)[0];
  for (Vertex x : g.neighbors(w)) {
    if (best[x] != kUnreachable && (best[pick] == kUnreachable || best[x] > best[pick])) {
      pick = x;
    }
  }
  return pick;
}

// Deletes every edge at w except w-keep.
inline Graph prune_to_pendant(const Graph& g, Vertex w, Vertex keep) {
  g.CheckVertex(w);
  if (!g.has_edge(w, keep)) {
    throw GraphError("prune_to_pendant: " + std::to_string(keep) +
                     " is not a neighbor of " + std::to_string(w));
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if ((a == w || b == w) && a != keep && b != keep) continue;
    edges.emplace_back(a, b);
  }
  Graph out = Graph::FromEdges(g.order(), edges);
  if (!is_connected(out)) {
    throw GraphError("prune_to_pendant: pruning vertex " + std::to_string(w) +
                     " disconnects the graph");
  }
  return out;
}

struct EdgeDeletion {
  Graph graph;
  bool increased = false;
};

inline EdgeDeletion edge_deletion_increases(const Graph& g, Vertex u, Vertex v) {
  RequireConnected(g, "edge_deletion_increases");
  Graph out = remove_edge(g, u, v);
  if (!is_connected(out)) {
    throw GraphError("edge_deletion_increases: (" + std::to_string(u) + "," +
                     std::to_string(v) + ") is a bridge");
  }
  const bool up = wiener(out) > wiener(g);
  return {std::move(out), up};
}

namespace transforms_detail {

// Rooted view of a tree restricted to `members`, rooted at `root`.
struct RootedTree {
  std::vector<std::optional<Vertex>> parent;
  std::vector<std::vector<Vertex>> children;
  std::vector<std::size_t> depth;
};

inline RootedTree Root(const Graph& g, const std::vector<bool>& members,
                       Vertex root) {
  RootedTree t;
  t.parent.assign(g.order(), std::nullopt);
  t.children.assign(g.order(), {});
  t.depth.assign(g.order(), 0);
  std::vector<bool> seen(g.order());
  std::vector<Vertex> queue{root};
  seen[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex x : g.neighbors(u)) {
      if (!members[x] || seen[x]) continue;
      seen[x] = true;
      t.parent[x] = u;
      t.children[u].push_back(x);
      t.depth[x] = t.depth[u] + 1;
      queue.push_back(x);
    }
  }
  return t;
}

// Follows a hanging path down from `top` to its last vertex.
inline std::pair<Vertex, std::size_t> PathEnd(const RootedTree& t, Vertex top) {
  std::size_t len = 1;
  while (!t.children[top].empty()) {
    top = t.children[top][0];
    ++len;
  }
  return {top, len};
}

}  // namespace transforms_detail

// Rebuilds the branch B (attached to the rest of g only through `gate`) into
// a path hanging from gate. First g[B + gate] is cut down to a spanning tree
// by deleting non-bridge edges in ascending order; then, at the deepest
// branching vertex, the end of the shorter hanging path is moved to the end
// of the longer one until a single path remains.
inline Graph straighten_branch(const Graph& g, std::span<const Vertex> branch,
                               Vertex gate) {
  using namespace transforms_detail;
  g.CheckVertex(gate);
  std::vector<bool> in_branch(g.order());
  for (Vertex b : branch) {
    g.CheckVertex(b);
    if (b == gate) throw GraphError("straighten_branch: gate lies in the branch");
    in_branch[b] = true;
  }
  for (Vertex b : branch) {
    for (Vertex x : g.neighbors(b)) {
      if (!in_branch[x] && x != gate) {
        throw GraphError("straighten_branch: branch vertex " +
                         std::to_string(b) + " reaches outside vertex " +
                         std::to_string(x) + " other than the gate");
      }
    }
  }
  std::vector<bool> members = in_branch;
  members[gate] = true;
  {
    const auto t = Root(g, members, gate);
    for (Vertex b : branch) {
      if (!t.parent[b]) {
        throw GraphError("straighten_branch: branch plus gate is disconnected");
      }
    }
  }

  Graph cur = g;
  for (auto [a, b] : g.edges()) {
    if (!members[a] || !members[b]) continue;
    const Graph trial = remove_edge(cur, a, b);
    const auto t = Root(trial, members, gate);
    const bool spans = std::all_of(branch.begin(), branch.end(),
                                   [&](Vertex x) { return t.parent[x].has_value(); });
    if (spans) cur = trial;
  }

  while (true) {
    const auto t = Root(cur, members, gate);
    std::optional<Vertex> pivot;
    for (Vertex x = 0; x < cur.order(); ++x) {
      if (!members[x] || t.children[x].size() < 2) continue;
      if (!pivot || t.depth[x] > t.depth[*pivot]) pivot = x;
    }
    if (!pivot) break;
    // Every child subtree of the deepest branching vertex is a hanging path.
    std::vector<std::pair<std::size_t, Vertex>> arms;
    for (Vertex c : t.children[*pivot]) arms.emplace_back(PathEnd(t, c).second, c);
    std::sort(arms.begin(), arms.end());
    const Vertex short_end = PathEnd(t, arms[0].second).first;
    const Vertex long_end = PathEnd(t, arms[1].second).first;
    cur = add_edge(remove_edge(cur, *t.parent[short_end], short_end), long_end,
                   short_end);
  }
  return cur;
}

}  // namespace condiam

#endif  // CONDIAM_TRANSFORMS_HPP_
