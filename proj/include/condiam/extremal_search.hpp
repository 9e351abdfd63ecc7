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

// Exhaustive graph classes, argmax-Wiener sweeps filtered by conditional
// diameter, and audit certificates for the extremal statements
//
//   D(G;s) = n-2s+1  =>  W(G) <= W(P_n)
//   D(G;s) = n-2s    =>  W(G) <= W(T^{s+1}_n)
//   D(G;s) = n-2s-1  =>  W(G) <= W(T^{s+1,n-s-2}_n)
//
// each with equality only for the named graph.

#ifndef CONDIAM_EXTREMAL_SEARCH_HPP_
#define CONDIAM_EXTREMAL_SEARCH_HPP_

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "condiam/canonical.hpp"
#include "condiam/conditional_diameter.hpp"
#include "condiam/families.hpp"
#include "condiam/graph.hpp"
#include "condiam/graph6.hpp"
#include "condiam/invariants.hpp"

namespace condiam {

// ---------------------------------------------------------------------------
// Graph classes

namespace search_detail {

// Extends every graph of order m-1 by one new vertex attached to each
// allowed neighbor set, keeping one canonical representative per class.
// Output is sorted by canonical key.
template <typename NeighborSets>
std::vector<Graph> ExtendByVertex(const std::vector<Graph>& parents,
                                  NeighborSets&& neighbor_sets) {
  std::map<std::string, Graph> seen;
  for (const Graph& p : parents) {
    const auto m = static_cast<Vertex>(p.order());
    for (const std::vector<Vertex>& nbrs : neighbor_sets(p)) {
      auto edges = p.edges();
      for (Vertex v : nbrs) edges.emplace_back(v, m);
      Graph child = canonical_form(Graph::FromEdges(m + 1, edges));
      auto key = emit_graph6(child);
      seen.try_emplace(std::move(key), std::move(child));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace search_detail

// One representative per isomorphism class of trees on n vertices, grown
// leaf by leaf from the single vertex and deduplicated by canonical key.
inline std::vector<Graph> enumerate_trees(std::size_t n) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
  std::vector<Graph> level{Graph::FromEdges(1, {})};
  for (std::size_t m = 2; m <= n; ++m) {
    level = search_detail::ExtendByVertex(level, [](const Graph& p) {
      std::vector<std::vector<Vertex>> sets;
      for (Vertex v = 0; v < p.order(); ++v) sets.push_back({v});
      return sets;
    });
  }
  return level;
}

// One representative per isomorphism class of connected graphs on n
// vertices. Every connected graph has a non-cut vertex, so each class is
// reached from a connected graph one vertex smaller. Cost grows quickly:
// n = 9 (261080 classes) takes on the order of a minute.
inline std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("enumerate_connected_graphs: n must be >= 1");
  }
  std::vector<Graph> level{Graph::FromEdges(1, {})};
  for (std::size_t m = 2; m <= n; ++m) {
    level = search_detail::ExtendByVertex(level, [](const Graph& p) {
      const std::size_t k = p.order();
      std::vector<std::vector<Vertex>> sets;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<Vertex> nbrs;
        for (Vertex v = 0; v < k; ++v) {
          if ((mask >> v) & 1) nbrs.push_back(v);
        }
        sets.push_back(std::move(nbrs));
      }
      return sets;
    });
  }
  return level;
}

class IngestError : public std::runtime_error {
 public:
  IngestError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<std::size_t> skipped_lines;
};

// Reads one graph6 record per line. A ">>graph6<<" header is accepted on any
// record; blank lines are ignored. Malformed lines abort with IngestError
// unless `lenient`, in which case their line numbers are collected.
inline IngestResult ingest_graph6(std::istream& in, bool lenient = false) {
  IngestResult result;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kGraph6Header) continue;
    try {
      result.graphs.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      if (!lenient) throw IngestError(number, e.what());
      result.skipped_lines.push_back(number);
    }
  }
  return result;
}

struct GraphSource {
  std::string description;
  std::vector<Graph> graphs;
};

// ---------------------------------------------------------------------------
// Sweeps

struct Maximizer {
  std::string key;    // canonical key
  std::string graph6; // first-seen labelled representative

  friend bool operator==(const Maximizer&, const Maximizer&) = default;
};

struct ArgmaxReport {
  std::uint64_t class_size = 0;
  std::uint64_t max_wiener = 0;
  std::vector<Maximizer> maximizers;  // sorted by key
  // Floyd-Warshall distance sum of every maximizer agreed with max_wiener.
  bool recheck_passed = true;

  friend bool operator==(const ArgmaxReport&, const ArgmaxReport&) = default;
};

// Wiener index via Floyd-Warshall, independent of the BFS route.
inline std::uint64_t naive_wiener(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint64_t> d(n * n, kInf);
  for (std::size_t u = 0; u < n; ++u) d[u * n + u] = 0;
  for (auto [a, b] : g.edges()) d[a * n + b] = d[b * n + a] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
      }
    }
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[i * n + j] >= kInf) throw GraphError("naive_wiener: disconnected");
      total += d[i * n + j];
    }
  }
  return total;
}

namespace search_detail {

struct PartialReport {
  std::uint64_t class_size = 0;
  std::uint64_t max_wiener = 0;
  // key -> (stream index, labelled graph6)
  std::map<std::string, std::pair<std::size_t, std::string>> maximizers;
};

// Associative and commutative: keeps the larger maximum, unions maximizer
// sets on equality, and keeps the earliest stream representative per key.
inline PartialReport Merge(PartialReport a, const PartialReport& b) {
  a.class_size += b.class_size;
  if (b.maximizers.empty()) return a;
  if (a.maximizers.empty() || b.max_wiener > a.max_wiener) {
    a.max_wiener = b.max_wiener;
    a.maximizers = b.maximizers;
    return a;
  }
  if (b.max_wiener < a.max_wiener) return a;
  for (const auto& [key, rep] : b.maximizers) {
    auto [it, inserted] = a.maximizers.try_emplace(key, rep);
    if (!inserted && rep.first < it->second.first) it->second = rep;
  }
  return a;
}

inline PartialReport SweepRange(std::span<const Graph> graphs,
                                std::size_t offset, std::size_t s,
                                std::uint64_t target) {
  PartialReport r;
  for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
    const Graph& g = graphs[idx];
    if (!is_connected(g)) continue;
    const DistanceMatrix dm(g);
    if (!conditional_diameter_equals(dm, s, target)) continue;
    ++r.class_size;
    std::uint64_t w = 0;
    for (Vertex u = 0; u < dm.order(); ++u) {
      for (Vertex v = u + 1; v < dm.order(); ++v) w += dm(u, v);
    }
    if (!r.maximizers.empty() && w < r.max_wiener) continue;
    if (r.maximizers.empty() || w > r.max_wiener) {
      r.maximizers.clear();
      r.max_wiener = w;
    }
    r.maximizers.try_emplace(canonical_key(g), offset + idx, emit_graph6(g));
  }
  return r;
}

}  // namespace search_detail

// Maximum Wiener index over the connected graphs of `graphs` whose
// conditional diameter D(G;s) equals `target`, with every maximizer up to
// isomorphism. Work is split into `threads` contiguous chunks and merged in
// stream order, so the result does not depend on the thread count.
inline ArgmaxReport sweep_class(std::span<const Graph> graphs, std::size_t s,
                                std::uint64_t target, std::size_t threads = 1) {
  if (s < 1) throw std::invalid_argument("sweep_class: s must be >= 1");
  for (const Graph& g : graphs) {
    if (g.order() != graphs.front().order()) {
      throw std::invalid_argument("sweep_class: graphs of mixed order (" +
                                  std::to_string(graphs.front().order()) +
                                  " and " + std::to_string(g.order()) + ")");
    }
  }
  threads = std::max<std::size_t>(1, std::min(threads, graphs.size()));
  std::vector<search_detail::PartialReport> parts(threads);
  const std::size_t chunk = graphs.empty() ? 0 : (graphs.size() + threads - 1) / threads;
  auto work = [&](std::size_t t) {
    const std::size_t begin = std::min(graphs.size(), t * chunk);
    const std::size_t end = std::min(graphs.size(), begin + chunk);
    parts[t] = search_detail::SweepRange(graphs.subspan(begin, end - begin),
                                         begin, s, target);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  search_detail::PartialReport total;
  for (const auto& p : parts) total = search_detail::Merge(std::move(total), p);

  ArgmaxReport report;
  report.class_size = total.class_size;
  report.max_wiener = total.max_wiener;
  for (const auto& [key, rep] : total.maximizers) {
    report.maximizers.push_back({key, rep.second});
    if (naive_wiener(parse_graph6(rep.second)) != report.max_wiener) {
      report.recheck_passed = false;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Certificates

enum class AuditStatus { kMatchUnique, kTie, kMismatch, kEmptyClass };

inline std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::kMatchUnique:
      return "MATCH_UNIQUE";
    case AuditStatus::kTie:
      return "TIE";
    case AuditStatus::kMismatch:
      return "MISMATCH";
    case AuditStatus::kEmptyClass:
      return "EMPTY_CLASS";
  }
  return "?";
}

inline AuditStatus audit_status_from_string(const std::string& text) {
  for (auto s : {AuditStatus::kMatchUnique, AuditStatus::kTie,
                 AuditStatus::kMismatch, AuditStatus::kEmptyClass}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown audit status '" + text + "'");
}

struct ExtremalClaim {
  int c = 0;
  std::size_t s = 1;
  std::size_t n = 0;
  std::uint64_t target_d = 0;  // n - 2s - c
  std::vector<Maximizer> claimed;
  std::uint64_t claimed_wiener = 0;

  friend bool operator==(const ExtremalClaim&, const ExtremalClaim&) = default;
};

// Both sides of the closing comparison for c = 1: the closed-form polynomial
// and the difference of the two constructed trees' Wiener indices.
struct Crosscheck {
  Rational paper_poly_value;
  std::int64_t construction_difference_value = 0;

  friend bool operator==(const Crosscheck&, const Crosscheck&) = default;
};

struct VerificationCertificate {
  ExtremalClaim claim;
  ArgmaxReport report;
  AuditStatus status = AuditStatus::kEmptyClass;
  std::optional<Crosscheck> crosscheck;
  std::string source;

  friend bool operator==(const VerificationCertificate&,
                         const VerificationCertificate&) = default;
};

inline ExtremalClaim make_claim(int c, std::size_t s, std::size_t n) {
  const Graph g = claimed_extremal(c, s, n);
  ExtremalClaim claim;
  claim.c = c;
  claim.s = s;
  claim.n = n;
  claim.target_d = static_cast<std::uint64_t>(static_cast<std::int64_t>(n) -
                                              2 * static_cast<std::int64_t>(s) - c);
  claim.claimed.push_back({canonical_key(g), emit_graph6(g)});
  claim.claimed_wiener = wiener(g);
  return claim;
}

inline AuditStatus classify(const ExtremalClaim& claim,
                            const ArgmaxReport& report) {
  if (report.class_size == 0) return AuditStatus::kEmptyClass;
  const auto& key = claim.claimed.front().key;
  const bool present =
      std::any_of(report.maximizers.begin(), report.maximizers.end(),
                  [&](const Maximizer& m) { return m.key == key; });
  if (!present) return AuditStatus::kMismatch;
  return report.maximizers.size() == 1 ? AuditStatus::kMatchUnique
                                       : AuditStatus::kTie;
}

inline VerificationCertificate verify_claim(int c, std::size_t s, std::size_t n,
                                            const GraphSource& source,
                                            std::size_t threads = 1) {
  check_extremal_hypothesis(c, s, n);
  if (source.graphs.empty()) {
    throw std::invalid_argument("verify_claim: source '" + source.description +
                                "' is empty");
  }
  if (source.graphs.front().order() != n) {
    throw std::invalid_argument(
        "verify_claim: source graphs have order " +
        std::to_string(source.graphs.front().order()) + ", expected " +
        std::to_string(n));
  }
  VerificationCertificate cert;
  cert.claim = make_claim(c, s, n);
  cert.report = sweep_class(source.graphs, s, cert.claim.target_d, threads);
  cert.status = classify(cert.claim, cert.report);
  if (c == 1) {
    cert.crosscheck = Crosscheck{
        paper_difference_poly(static_cast<std::int64_t>(n),
                              static_cast<std::int64_t>(s)),
        construction_difference(n, s)};
  }
  cert.source = source.description;
  return cert;
}

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson to_json(const VerificationCertificate& cert) {
  auto graphs = [](const std::vector<Maximizer>& ms) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& m : ms) arr.push_back({{"key", m.key}, {"graph6", m.graph6}});
    return arr;
  };
  OrderedJson j;
  j["claim"] = {{"c", cert.claim.c},
                {"s", cert.claim.s},
                {"n", cert.claim.n},
                {"target_D", cert.claim.target_d},
                {"claimed", graphs(cert.claim.claimed)},
                {"claimed_wiener", cert.claim.claimed_wiener}};
  j["report"] = {{"class_size", cert.report.class_size},
                 {"max_wiener", cert.report.max_wiener},
                 {"maximizers", graphs(cert.report.maximizers)},
                 {"recheck_passed", cert.report.recheck_passed}};
  j["status"] = to_string(cert.status);
  if (cert.crosscheck) {
    j["crosscheck"] = {
        {"paper_poly_value", to_string(cert.crosscheck->paper_poly_value)},
        {"construction_difference_value",
         cert.crosscheck->construction_difference_value}};
  } else {
    j["crosscheck"] = nullptr;
  }
  j["source"] = cert.source;
  return j;
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)),
                  std::stoll(text.substr(slash + 1)));
}

inline VerificationCertificate certificate_from_json(const nlohmann::json& j) {
  auto graphs = [](const nlohmann::json& arr) {
    std::vector<Maximizer> out;
    for (const auto& m : arr) {
      out.push_back({m.at("key").get<std::string>(),
                     m.at("graph6").get<std::string>()});
    }
    return out;
  };
  VerificationCertificate cert;
  const auto& claim = j.at("claim");
  cert.claim.c = claim.at("c").get<int>();
  cert.claim.s = claim.at("s").get<std::size_t>();
  cert.claim.n = claim.at("n").get<std::size_t>();
  cert.claim.target_d = claim.at("target_D").get<std::uint64_t>();
  cert.claim.claimed = graphs(claim.at("claimed"));
  cert.claim.claimed_wiener = claim.at("claimed_wiener").get<std::uint64_t>();
  const auto& report = j.at("report");
  cert.report.class_size = report.at("class_size").get<std::uint64_t>();
  cert.report.max_wiener = report.at("max_wiener").get<std::uint64_t>();
  cert.report.maximizers = graphs(report.at("maximizers"));
  cert.report.recheck_passed = report.at("recheck_passed").get<bool>();
  cert.status = audit_status_from_string(j.at("status").get<std::string>());
  if (!j.at("crosscheck").is_null()) {
    const auto& x = j.at("crosscheck");
    cert.crosscheck = Crosscheck{
        parse_rational(x.at("paper_poly_value").get<std::string>()),
        x.at("construction_difference_value").get<std::int64_t>()};
  }
  cert.source = j.at("source").get<std::string>();
  return cert;
}

enum class CertificateFormat { kJson, kCsvRow };

inline constexpr const char* kCertificateCsvHeader =
    "c,s,n,target_D,class_size,max_wiener,status";

inline std::string emit_certificate(const VerificationCertificate& cert,
                                    CertificateFormat format) {
  if (format == CertificateFormat::kJson) return to_json(cert).dump(2);
  std::ostringstream row;
  row << cert.claim.c << ',' << cert.claim.s << ',' << cert.claim.n << ','
      << cert.claim.target_d << ',' << cert.report.class_size << ','
      << cert.report.max_wiener << ',' << to_string(cert.status);
  return row.str();
}

inline VerificationCertificate parse_certificate(const std::string& json_text) {
  return certificate_from_json(nlohmann::json::parse(json_text));
}

}  // namespace condiam

#endif  // CONDIAM_EXTREMAL_SEARCH_HPP_
