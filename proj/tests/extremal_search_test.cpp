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

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <vector>

#include "condiam/canonical.hpp"
#include "condiam/extremal_search.hpp"
#include "condiam/families.hpp"
#include "oracles.hpp"

namespace condiam {
namespace {

GraphSource Trees(std::size_t n) {
  return {"trees(n=" + std::to_string(n) + ")", enumerate_trees(n)};
}

TEST(EnumerateTrees, SmallCounts) {
  EXPECT_EQ(enumerate_trees(1).size(), 1u);
  EXPECT_EQ(enumerate_trees(5).size(), 3u);
  EXPECT_EQ(enumerate_trees(7).size(), 11u);
}

TEST(EnumerateTrees, CompleteAndDuplicateFree) {
  const std::vector<std::size_t> published{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (std::size_t n = 1; n <= published.size(); ++n) {
    const auto trees = enumerate_trees(n);
    ASSERT_EQ(trees.size(), published[n - 1]) << n;
    std::set<std::string> keys;
    for (const auto& t : trees) {
      ASSERT_TRUE(is_tree(t));
      keys.insert(canonical_key(t));
    }
    ASSERT_EQ(keys.size(), trees.size());
  }
}

TEST(EnumerateTrees, SmallClassesPairwiseNonIsomorphicByBijection) {
  const auto trees = enumerate_trees(7);
  for (std::size_t a = 0; a < trees.size(); ++a) {
    for (std::size_t b = a + 1; b < trees.size(); ++b) {
      ASSERT_FALSE(oracle::isomorphic(trees[a], trees[b]));
    }
  }
}

TEST(EnumerateConnectedGraphs, Counts) {
  const std::vector<std::size_t> published{1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= published.size(); ++n) {
    const auto graphs = enumerate_connected_graphs(n);
    ASSERT_EQ(graphs.size(), published[n - 1]) << n;
    for (const auto& g : graphs) ASSERT_TRUE(is_connected(g));
  }
}

TEST(IngestGraph6, ReadsLinesAndHeaders) {
  std::istringstream two("Bw\nCh\n");
  EXPECT_EQ(ingest_graph6(two).graphs.size(), 2u);
  std::istringstream header(">>graph6<<\nBw\n>>graph6<<Ch\n");
  const auto r = ingest_graph6(header);
  ASSERT_EQ(r.graphs.size(), 2u);
  EXPECT_EQ(r.graphs[1], path_graph(4));
}

TEST(IngestGraph6, CorruptLineIsNamed) {
  std::istringstream bad("Bw\nCh\nD\x1f\nBw\n");
  try {
    ingest_graph6(bad);
    FAIL() << "expected IngestError";
  } catch (const IngestError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream again("Bw\nCh\nD\x1f\nBw\n");
  const auto lenient = ingest_graph6(again, true);
  EXPECT_EQ(lenient.graphs.size(), 3u);
  EXPECT_EQ(lenient.skipped_lines, std::vector<std::size_t>{3});
}

TEST(SweepClass, PathIsTheUniqueMaximizerForTheTopClass) {
  const auto trees = enumerate_trees(8);
  const auto r = sweep_class(trees, 2, 5);
  EXPECT_EQ(r.max_wiener, 84u);
  ASSERT_EQ(r.maximizers.size(), 1u);
  EXPECT_EQ(r.maximizers[0].key, canonical_key(path_graph(8)));
  EXPECT_TRUE(r.recheck_passed);
}

TEST(SweepClass, SingleStarredTree) {
  const auto r = sweep_class(enumerate_trees(7), 2, 3);
  EXPECT_EQ(r.max_wiener, 50u);
  ASSERT_EQ(r.maximizers.size(), 1u);
  EXPECT_EQ(r.maximizers[0].key, canonical_key(tree_single(7, 3)));
}

TEST(SweepClass, TargetAboveBoundIsEmpty) {
  const auto r = sweep_class(enumerate_trees(7), 3, 7);
  EXPECT_EQ(r.class_size, 0u);
  EXPECT_TRUE(r.maximizers.empty());
}

TEST(SweepClass, ClassSizeMatchesNaiveFilter) {
  const auto trees = enumerate_trees(9);
  for (std::size_t s = 1; s <= 3; ++s) {
    for (std::uint64_t target = 0; target <= 8; ++target) {
      std::uint64_t expected = 0;
      std::uint64_t best = 0;
      for (const auto& t : trees) {
        if (oracle::conditional_diameter(t, s) != target) continue;
        ++expected;
        best = std::max(best, oracle::wiener(t));
      }
      const auto r = sweep_class(trees, s, target);
      ASSERT_EQ(r.class_size, expected) << "s=" << s << " D=" << target;
      ASSERT_EQ(r.max_wiener, best);
    }
  }
}

TEST(SweepClass, SkipsDisconnectedAndRejectsMixedOrders) {
  std::vector<Graph> graphs{build_graph(4, {{0, 1}}), path_graph(4)};
  EXPECT_EQ(sweep_class(graphs, 1, 3).class_size, 1u);
  graphs.push_back(path_graph(5));
  EXPECT_THROW(sweep_class(graphs, 1, 3), std::invalid_argument);
}

TEST(SweepClass, ThreadCountDoesNotChangeTheReport) {
  const auto trees = enumerate_trees(11);
  const auto one = sweep_class(trees, 2, 6, 1);
  for (std::size_t threads : {2u, 3u, 8u}) {
    EXPECT_EQ(sweep_class(trees, 2, 6, threads), one);
  }
}

TEST(VerifyClaim, PathClaim) {
  const auto cert = verify_claim(-1, 2, 8, Trees(8));
  EXPECT_EQ(cert.status, AuditStatus::kMatchUnique);
  EXPECT_EQ(cert.report.max_wiener, 84u);
  EXPECT_FALSE(cert.crosscheck.has_value());
}

TEST(VerifyClaim, SinglePendantClaim) {
  const auto cert = verify_claim(0, 2, 9, Trees(9));
  EXPECT_EQ(cert.status, AuditStatus::kMatchUnique);
  EXPECT_EQ(cert.report.maximizers[0].key, canonical_key(tree_single(9, 3)));
}

TEST(VerifyClaim, DoublePendantClaimTiesAtTen) {
  const auto cert = verify_claim(1, 2, 10, Trees(10));
  EXPECT_EQ(cert.status, AuditStatus::kTie);
  EXPECT_EQ(cert.report.max_wiener, 141u);
  std::set<std::string> keys;
  for (const auto& m : cert.report.maximizers) keys.insert(m.key);
  EXPECT_EQ(keys, (std::set<std::string>{canonical_key(tree_double(10, 3, 6)),
                                         canonical_key(tree_tail2(10, 4))}));
  ASSERT_TRUE(cert.crosscheck.has_value());
  EXPECT_EQ(cert.crosscheck->construction_difference_value, 0);
  EXPECT_EQ(cert.crosscheck->paper_poly_value, paper_difference_poly(10, 2));
}

TEST(VerifyClaim, DoublePendantClaimReversesAtNine) {
  const auto cert = verify_claim(1, 2, 9, Trees(9));
  EXPECT_EQ(cert.status, AuditStatus::kMismatch);
  EXPECT_EQ(cert.claim.claimed_wiener, 100u);
  EXPECT_EQ(cert.report.max_wiener, 102u);
  EXPECT_EQ(cert.crosscheck->construction_difference_value, -2);
  EXPECT_EQ(cert.crosscheck->paper_poly_value, Rational(27));
}

TEST(VerifyClaim, Errors) {
  EXPECT_THROW(verify_claim(0, 2, 6, Trees(6)), FamilyError);
  EXPECT_THROW(verify_claim(0, 2, 8, GraphSource{"empty", {}}), std::invalid_argument);
  EXPECT_THROW(verify_claim(0, 2, 8, Trees(9)), std::invalid_argument);
}

TEST(Certificate, JsonRoundTripAndFieldOrder) {
  const auto cert = verify_claim(1, 2, 10, Trees(10));
  const std::string json = emit_certificate(cert, CertificateFormat::kJson);
  EXPECT_EQ(parse_certificate(json), cert);
  EXPECT_LT(json.find("\"claim\""), json.find("\"report\""));
  EXPECT_LT(json.find("\"report\""), json.find("\"status\""));
  EXPECT_LT(json.find("\"status\""), json.find("\"crosscheck\""));
  EXPECT_NE(json.find("\"status\": \"TIE\""), std::string::npos);

  const auto plain = verify_claim(0, 2, 7, Trees(7));
  const std::string plain_json = emit_certificate(plain, CertificateFormat::kJson);
  EXPECT_NE(plain_json.find("\"MATCH_UNIQUE\""), std::string::npos);
  EXPECT_EQ(parse_certificate(plain_json), plain);
}

TEST(Certificate, CsvRow) {
  const auto cert = verify_claim(0, 2, 7, Trees(7));
  EXPECT_EQ(emit_certificate(cert, CertificateFormat::kCsvRow),
            "0,2,7,3,6,50,MATCH_UNIQUE");
  EXPECT_STREQ(kCertificateCsvHeader, "c,s,n,target_D,class_size,max_wiener,status");
}

TEST(Certificate, Deterministic) {
  const auto a = emit_certificate(verify_claim(1, 1, 9, Trees(9)), CertificateFormat::kJson);
  const auto b = emit_certificate(verify_claim(1, 1, 9, Trees(9), 4), CertificateFormat::kJson);
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace condiam
