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

// Randomized property suites for the transforms, shared by the CLI
// `transform-check` subcommand. Each suite returns the number of instances
// checked and every counterexample it met.

#ifndef CONDIAM_TRANSFORM_CHECKS_HPP_
#define CONDIAM_TRANSFORM_CHECKS_HPP_

#include <random>
#include <string>
#include <vector>

#include "condiam/graph.hpp"
#include "condiam/graph6.hpp"
#include "condiam/invariants.hpp"
#include "condiam/random_graphs.hpp"
#include "condiam/transforms.hpp"

namespace condiam {

struct CheckOutcome {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

inline CheckOutcome check_pendant_identity(std::size_t trials,
                                           std::size_t max_order, Rng& rng) {
  CheckOutcome out{"pendant-identity"};
  std::uniform_int_distribution<std::size_t> order(2, max_order);
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = random_tree(order(rng), rng);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 1) continue;
      ++out.checked;
      if (!pendant_identity_holds(g, v)) {
        out.counterexamples.push_back(emit_graph6(g) + " v=" + std::to_string(v));
      }
    }
  }
  return out;
}

// Host of order >= 2, paths with l >= k >= 1, total order <= max_order.
inline ShiftSite random_shift_site(std::size_t max_order, Rng& rng) {
  std::uniform_int_distribution<std::size_t> host_order(2, max_order - 2);
  const std::size_t h = host_order(rng);
  const std::size_t room = max_order - h;
  std::uniform_int_distribution<std::size_t> pick_k(1, room / 2);
  const std::size_t k = pick_k(rng);
  std::uniform_int_distribution<std::size_t> pick_l(k, room - k);
  const std::size_t l = pick_l(rng);
  std::bernoulli_distribution tree_host(0.5);
  Graph host = tree_host(rng) ? random_tree(h, rng)
                              : random_connected_graph(h, 0.3, rng);
  std::uniform_int_distribution<Vertex> pick_v(0, static_cast<Vertex>(h - 1));
  return ShiftSite{std::move(host), pick_v(rng), k, l};
}

inline CheckOutcome check_path_shift(std::size_t trials, std::size_t max_order,
                                     Rng& rng) {
  CheckOutcome out{"path-shift"};
  for (std::size_t t = 0; t < trials; ++t) {
    const ShiftSite site = random_shift_site(max_order, rng);
    ++out.checked;
    const auto before = wiener(attach_two_paths(site));
    const auto after = wiener(lemma23_shift(site));
    if (!(after > before)) {
      out.counterexamples.push_back(emit_graph6(site.host) + " v=" +
                                    std::to_string(site.v) + " k=" +
                                    std::to_string(site.k) + " l=" +
                                    std::to_string(site.l));
    }
  }
  return out;
}

inline CheckOutcome check_edge_deletion(std::size_t trials,
                                        std::size_t max_order, Rng& rng) {
  CheckOutcome out{"edge-deletion"};
  std::uniform_int_distribution<std::size_t> order(3, max_order);
  while (out.checked < trials) {
    const Graph g = random_connected_graph(order(rng), 0.25, rng);
    std::vector<Edge> cycle_edges;
    for (auto [u, v] : g.edges()) {
      if (!is_bridge(g, u, v)) cycle_edges.emplace_back(u, v);
    }
    if (cycle_edges.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, cycle_edges.size() - 1);
    const auto [u, v] = cycle_edges[pick(rng)];
    ++out.checked;
    if (!edge_deletion_increases(g, u, v).increased) {
      out.counterexamples.push_back(emit_graph6(g) + " edge=" +
                                    std::to_string(u) + "-" + std::to_string(v));
    }
  }
  return out;
}

struct BranchInstance {
  Graph graph;
  std::vector<Vertex> branch;
  Vertex gate = 0;
};

// Rest of the graph on ids [0, r) with gate 0; branch on ids [r, r+b) joined
// to the gate by at least one edge and to nothing else outside.
inline BranchInstance random_branch_instance(std::size_t max_order, Rng& rng) {
  std::uniform_int_distribution<std::size_t> rest_order(1, max_order - 1);
  const std::size_t r = rest_order(rng);
  std::uniform_int_distribution<std::size_t> branch_order(1, max_order - r);
  const std::size_t b = branch_order(rng);
  auto edges = random_connected_graph(r, 0.3, rng).edges();
  for (auto [u, v] : random_connected_graph(b, 0.3, rng).edges()) {
    edges.emplace_back(u + r, v + r);
  }
  std::bernoulli_distribution coin(0.4);
  std::uniform_int_distribution<Vertex> anchor(0, static_cast<Vertex>(b - 1));
  edges.emplace_back(0, static_cast<Vertex>(r) + anchor(rng));
  for (Vertex x = 0; x < b; ++x) {
    if (coin(rng)) edges.emplace_back(0, static_cast<Vertex>(r) + x);
  }
  BranchInstance inst;
  inst.graph = Graph::FromEdges(r + b, edges);
  for (Vertex x = 0; x < b; ++x) inst.branch.push_back(static_cast<Vertex>(r) + x);
  return inst;
}

// g'[B] is a path with exactly one end adjacent to the gate and no other
// branch vertex adjacent to it.
inline bool is_hanging_path(const Graph& g, std::span<const Vertex> branch,
                            Vertex gate) {
  std::vector<bool> in(g.order());
  for (Vertex b : branch) in[b] = true;
  std::size_t inner_edges = 0;
  std::size_t gate_links = 0;
  Vertex gate_end = 0;
  for (Vertex b : branch) {
    std::size_t inner = 0;
    for (Vertex x : g.neighbors(b)) {
      if (in[x]) ++inner;
      if (x == gate) {
        ++gate_links;
        gate_end = b;
      }
    }
    if (inner > 2) return false;
    inner_edges += inner;
  }
  inner_edges /= 2;
  if (inner_edges + 1 != branch.size() || gate_links != 1) return false;
  std::size_t inner_at_end = 0;
  for (Vertex x : g.neighbors(gate_end)) inner_at_end += in[x];
  if (inner_at_end > 1) return false;
  // Connected with n-1 edges and max inner degree 2: a path.
  std::vector<bool> seen(g.order());
  std::vector<Vertex> stack{gate_end};
  seen[gate_end] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex x : g.neighbors(u)) {
      if (in[x] && !seen[x]) {
        seen[x] = true;
        stack.push_back(x);
      }
    }
  }
  return reached == branch.size();
}

inline CheckOutcome check_straighten(std::size_t trials, std::size_t max_order,
                                     Rng& rng) {
  CheckOutcome out{"straighten-branch"};
  for (std::size_t t = 0; t < trials; ++t) {
    const auto inst = random_branch_instance(max_order, rng);
    ++out.checked;
    const Graph after = straighten_branch(inst.graph, inst.branch, inst.gate);
    const bool fine = after.order() == inst.graph.order() &&
                      wiener(after) >= wiener(inst.graph) &&
                      is_hanging_path(after, inst.branch, inst.gate);
    if (!fine) out.counterexamples.push_back(emit_graph6(inst.graph));
  }
  return out;
}

}  // namespace condiam

#endif  // CONDIAM_TRANSFORM_CHECKS_HPP_
