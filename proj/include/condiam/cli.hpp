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

// Command-line front end. Exit codes: 0 success, 1 audit signal (a
// certificate with status TIE or MISMATCH, or a property counterexample),
// 2 usage or input error.

#ifndef CONDIAM_CLI_HPP_
#define CONDIAM_CLI_HPP_

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "condiam/canonical.hpp"
#include "condiam/conditional_diameter.hpp"
#include "condiam/extremal_search.hpp"
#include "condiam/families.hpp"
#include "condiam/graph.hpp"
#include "condiam/graph6.hpp"
#include "condiam/invariants.hpp"
#include "condiam/transform_checks.hpp"

namespace condiam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAudit = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kThreadsEnv = "CONDIAM_THREADS";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string subcommand;
  std::string g6;
  std::string input;
  std::string source = "trees";
  std::string output;
  std::string format;
  std::string kind;
  std::size_t s = 1;
  int c = 0;
  std::size_t n = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t target = 0;
  std::size_t threads = 1;
  std::size_t trials = 1000;
  std::size_t max_order = 20;
  std::uint64_t seed = 1;
  std::size_t s_max = 2;
  std::size_t n_max = 12;
  std::vector<int> offsets{-1, 0, 1};
  bool want_wiener = false;
  bool want_diameter = false;
  bool want_transmissions = false;
  bool lenient = false;
};

inline std::size_t default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

namespace cli_detail {

inline Graph load_single_graph(const CliConfig& cfg) {
  if (!cfg.g6.empty() && !cfg.input.empty()) {
    throw UsageError("give either --g6 or --input, not both");
  }
  if (!cfg.g6.empty()) return parse_graph6(cfg.g6);
  if (cfg.input.empty()) throw UsageError("a graph is required (--g6 or --input)");
  std::ifstream in(cfg.input);
  if (!in) throw UsageError("cannot read '" + cfg.input + "'");
  auto graphs = ingest_graph6(in).graphs;
  if (graphs.size() != 1) {
    throw UsageError("'" + cfg.input + "' holds " +
                     std::to_string(graphs.size()) + " graphs, expected 1");
  }
  return graphs.front();
}

inline GraphSource load_source(const CliConfig& cfg, std::size_t n) {
  if (cfg.source == "trees") {
    if (n < 1) throw UsageError("--n is required for --source trees");
    return {"trees(n=" + std::to_string(n) + ")", enumerate_trees(n)};
  }
  if (cfg.source == "exhaustive") {
    if (n < 1) throw UsageError("--n is required for --source exhaustive");
    return {"connected(n=" + std::to_string(n) + ")",
            enumerate_connected_graphs(n)};
  }
  if (cfg.source.starts_with("g6:")) {
    const std::string path = cfg.source.substr(3);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    auto result = ingest_graph6(in, cfg.lenient);
    return {"graph6:" + path, std::move(result.graphs)};
  }
  throw UsageError("unknown source '" + cfg.source +
                   "' (expected trees, exhaustive or g6:PATH)");
}

// Machine formats go to --out when given, otherwise to stdout.
inline void write_result(const CliConfig& cfg, const std::string& text,
                         std::ostream& out) {
  if (cfg.output.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw UsageError("cannot write '" + cfg.output + "'");
  file << text << '\n';
}

inline FamilySpec family_spec(const CliConfig& cfg) {
  FamilySpec spec;
  spec.n = cfg.n;
  spec.i = cfg.i;
  spec.j = cfg.j;
  if (cfg.kind == "path") {
    spec.kind = FamilyKind::kPath;
  } else if (cfg.kind == "cycle") {
    spec.kind = FamilyKind::kCycle;
  } else if (cfg.kind == "single") {
    spec.kind = FamilyKind::kTreeSingle;
  } else if (cfg.kind == "double") {
    spec.kind = FamilyKind::kTreeDouble;
  } else if (cfg.kind == "tail2") {
    spec.kind = FamilyKind::kTreeTail2;
  } else {
    throw UsageError("unknown family '" + cfg.kind + "'");
  }
  return spec;
}

inline nlohmann::ordered_json report_json(const ArgmaxReport& r) {
  nlohmann::ordered_json maxs = nlohmann::ordered_json::array();
  for (const auto& m : r.maximizers) {
    maxs.push_back({{"key", m.key}, {"graph6", m.graph6}});
  }
  return {{"class_size", r.class_size},
          {"max_wiener", r.max_wiener},
          {"maximizers", maxs},
          {"recheck_passed", r.recheck_passed}};
}

inline bool is_audit_failure(AuditStatus s) {
  return s == AuditStatus::kTie || s == AuditStatus::kMismatch;
}

inline std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(vs[k]);
  }
  return out;
}

inline int run_compute(const CliConfig& cfg, std::ostream& out) {
  const Graph g = load_single_graph(cfg);
  const auto report = invariant_report(g);
  const bool all = !cfg.want_wiener && !cfg.want_diameter && !cfg.want_transmissions;
  const int wanted = cfg.want_wiener + cfg.want_diameter + cfg.want_transmissions;
  if (cfg.format == "json") {
    nlohmann::ordered_json j{{"n", report.n}, {"m", g.size()}};
    if (all || cfg.want_wiener) j["wiener"] = report.wiener;
    if (all || cfg.want_diameter) j["diameter"] = report.diameter;
    if (all || cfg.want_transmissions) j["transmissions"] = report.transmissions;
    write_result(cfg, j.dump(), out);
    return kExitOk;
  }
  std::ostringstream text;
  if (wanted == 1 && cfg.want_wiener) {
    text << report.wiener;
  } else if (wanted == 1 && cfg.want_diameter) {
    text << report.diameter;
  } else {
    text << "n " << report.n << "\nm " << g.size();
    if (all || cfg.want_wiener) text << "\nwiener " << report.wiener;
    if (all || cfg.want_diameter) text << "\ndiameter " << report.diameter;
    if (all || cfg.want_transmissions) {
      text << "\ntransmissions";
      for (auto t : report.transmissions) text << ' ' << t;
    }
  }
  write_result(cfg, text.str(), out);
  return kExitOk;
}

inline int run_family(const CliConfig& cfg, std::ostream& out) {
  const Graph g = build_family(family_spec(cfg));
  if (cfg.format == "json") {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    write_result(cfg,
                 nlohmann::ordered_json{{"kind", cfg.kind},
                                        {"n", g.order()},
                                        {"graph6", emit_graph6(g)},
                                        {"edges", edges},
                                        {"wiener", wiener(g)}}
                     .dump(),
                 out);
  } else if (cfg.format == "text") {
    std::ostringstream text;
    for (auto [u, v] : g.edges()) text << u << ' ' << v << '\n';
    std::string body = text.str();
    if (!body.empty()) body.pop_back();
    write_result(cfg, body, out);
  } else {
    write_result(cfg, emit_graph6(g), out);
  }
  return kExitOk;
}

inline int run_condiam(const CliConfig& cfg, std::ostream& out) {
  const Graph g = load_single_graph(cfg);
  const auto result = conditional_diameter(g, cfg.s);
  if (cfg.format == "json") {
    nlohmann::ordered_json j{{"s", cfg.s}, {"value", result.value}};
    if (result.witness) {
      j["witness"] = {{"V1", result.witness->first},
                      {"V2", result.witness->second},
                      {"distance", result.witness->value}};
    } else {
      j["witness"] = nullptr;
    }
    write_result(cfg, j.dump(), out);
    return kExitOk;
  }
  std::ostringstream text;
  text << result.value;
  if (result.witness) {
    text << "\nV1 " << join(result.witness->first) << "\nV2 "
         << join(result.witness->second);
  }
  write_result(cfg, text.str(), out);
  return kExitOk;
}

inline int run_transform_check(const CliConfig& cfg, std::ostream& out) {
  if (cfg.max_order < 4) throw UsageError("--max-order must be >= 4");
  Rng rng(cfg.seed);
  const std::vector<CheckOutcome> outcomes{
      check_pendant_identity(cfg.trials, std::min<std::size_t>(cfg.max_order, 24), rng),
      check_path_shift(cfg.trials, cfg.max_order, rng),
      check_edge_deletion(cfg.trials, cfg.max_order, rng),
      check_straighten(cfg.trials, std::min<std::size_t>(cfg.max_order, 16), rng)};
  bool ok = true;
  std::ostringstream text;
  for (const auto& o : outcomes) {
    text << o.name << ' ' << o.checked << " checked, "
         << o.counterexamples.size() << " counterexamples\n";
    for (const auto& ce : o.counterexamples) text << "  " << ce << '\n';
    ok = ok && o.ok();
  }
  std::string body = text.str();
  body.pop_back();
  write_result(cfg, body, out);
  return ok ? kExitOk : kExitAudit;
}

inline int run_sweep(const CliConfig& cfg, std::ostream& out) {
  const GraphSource source = load_source(cfg, cfg.n);
  const auto report = sweep_class(source.graphs, cfg.s, cfg.target, cfg.threads);
  if (cfg.format == "text") {
    std::ostringstream text;
    text << "class_size " << report.class_size << "\nmax_wiener "
         << report.max_wiener;
    for (const auto& m : report.maximizers) text << "\nmaximizer " << m.graph6;
    write_result(cfg, text.str(), out);
  } else {
    auto j = report_json(report);
    j["source"] = source.description;
    j["s"] = cfg.s;
    j["target_D"] = cfg.target;
    write_result(cfg, j.dump(2), out);
  }
  return kExitOk;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out) {
  check_extremal_hypothesis(cfg.c, cfg.s, cfg.n);
  const GraphSource source = load_source(cfg, cfg.n);
  const auto cert = verify_claim(cfg.c, cfg.s, cfg.n, source, cfg.threads);
  if (cfg.format == "csv") {
    write_result(cfg,
                 std::string(kCertificateCsvHeader) + "\n" +
                     emit_certificate(cert, CertificateFormat::kCsvRow),
                 out);
  } else {
    write_result(cfg, emit_certificate(cert, CertificateFormat::kJson), out);
  }
  if (!cfg.output.empty()) out << to_string(cert.status) << '\n';
  return is_audit_failure(cert.status) ? kExitAudit : kExitOk;
}

inline int run_audit(const CliConfig& cfg, std::ostream& out) {
  bool flagged = false;
  std::vector<VerificationCertificate> certs;
  for (int c : cfg.offsets) {
    if (c < -1 || c > 1) throw UsageError("--c values must be -1, 0 or 1");
    for (std::size_t s = 1; s <= cfg.s_max; ++s) {
      for (std::size_t n = extremal_min_order(c, s); n <= cfg.n_max; ++n) {
        const GraphSource source = load_source(cfg, n);
        certs.push_back(verify_claim(c, s, n, source, cfg.threads));
        flagged = flagged || is_audit_failure(certs.back().status);
      }
    }
  }
  if (cfg.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& cert : certs) arr.push_back(to_json(cert));
    write_result(cfg, arr.dump(2), out);
  } else {
    std::string table = kCertificateCsvHeader;
    for (const auto& cert : certs) {
      table += '\n' + emit_certificate(cert, CertificateFormat::kCsvRow);
    }
    write_result(cfg, table, out);
  }
  return flagged ? kExitAudit : kExitOk;
}

}  // namespace cli_detail

// Parses `args` (without the program name) and dispatches.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  using namespace cli_detail;
  CliConfig cfg;
  cfg.threads = default_threads();

  CLI::App app{"Wiener index and conditional diameter toolkit", "condiam"};
  app.require_subcommand(1);

  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("--g6", cfg.g6, "Inline graph6 record");
    sub->add_option("--input", cfg.input, "File holding one graph6 record");
  };
  auto add_out = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--out", cfg.output, "Write the result to this file");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)));
  };
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--source", cfg.source, "trees | exhaustive | g6:PATH")
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads, "Worker threads for the sweep")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--lenient", cfg.lenient, "Skip malformed graph6 lines");
  };

  auto* compute = app.add_subcommand("compute", "Invariants of one graph");
  add_graph_input(compute);
  compute->add_flag("--wiener", cfg.want_wiener, "Wiener index");
  compute->add_flag("--diameter", cfg.want_diameter, "Diameter");
  compute->add_flag("--transmissions", cfg.want_transmissions,
                    "Per-vertex transmissions");
  add_out(compute, {"text", "json"});

  auto* family = app.add_subcommand("family", "Emit a family member");
  family->add_option("--kind", cfg.kind, "path | cycle | single | double | tail2")
      ->required();
  family->add_option("--n", cfg.n, "Order")->required();
  family->add_option("--i", cfg.i, "1-based spine index");
  family->add_option("--j", cfg.j, "Second spine index (double)");
  add_out(family, {"g6", "text", "json"});

  auto* condiam = app.add_subcommand("condiam", "Conditional diameter D(G;s)");
  add_graph_input(condiam);
  condiam->add_option("--s", cfg.s, "Subset cardinality")
      ->required()
      ->check(CLI::PositiveNumber);
  add_out(condiam, {"text", "json"});

  auto* tcheck = app.add_subcommand("transform-check",
                                    "Randomized property suites for the transforms");
  tcheck->add_option("--trials", cfg.trials, "Instances per suite");
  tcheck->add_option("--max-order", cfg.max_order, "Largest graph order");
  tcheck->add_option("--seed", cfg.seed, "Random seed");
  add_out(tcheck, {"text"});

  auto* sweep = app.add_subcommand("sweep", "Argmax Wiener over one class");
  sweep->add_option("--s", cfg.s, "Subset cardinality")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--target", cfg.target, "Required D(G;s)")->required();
  sweep->add_option("--n", cfg.n, "Order (trees, exhaustive)");
  add_source(sweep);
  add_out(sweep, {"json", "text"});

  auto* verify = app.add_subcommand("verify", "Audit one extremal claim");
  verify->add_option("--c", cfg.c, "Offset c in D(G;s)=n-2s-c")
      ->required()
      ->check(CLI::Range(-1, 1));
  verify->add_option("--s", cfg.s, "Subset cardinality")->required()->check(CLI::PositiveNumber);
  verify->add_option("--n", cfg.n, "Order")->required();
  add_source(verify);
  add_out(verify, {"json", "csv"});

  auto* audit = app.add_subcommand("audit", "Audit a grid of (c,s,n) instances");
  audit->add_option("--c", cfg.offsets, "Offsets to audit")->capture_default_str();
  audit->add_option("--s-max", cfg.s_max, "Largest s")->check(CLI::PositiveNumber);
  audit->add_option("--n-max", cfg.n_max, "Largest n");
  add_source(audit);
  add_out(audit, {"csv", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "condiam: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return run_compute(cfg, out);
    if (family->parsed()) return run_family(cfg, out);
    if (condiam->parsed()) return run_condiam(cfg, out);
    if (tcheck->parsed()) return run_transform_check(cfg, out);
    if (sweep->parsed()) return run_sweep(cfg, out);
    if (verify->parsed()) return run_verify(cfg, out);
    if (audit->parsed()) return run_audit(cfg, out);
  } catch (const std::exception& e) {
    err << "condiam: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "condiam: no subcommand\n";
  return kExitUsage;
}

}  // namespace condiam::cli

#endif  // CONDIAM_CLI_HPP_
