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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "condiam/cli.hpp"
#include "condiam/families.hpp"

namespace condiam {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path TempFile(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

TEST(Cli, ComputeWienerOnly) {
  const auto r = Invoke({"compute", "--g6", "Bw", "--wiener"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
}

TEST(Cli, ComputeJson) {
  const auto r = Invoke({"compute", "--g6", "Ch", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["wiener"], 10);
  EXPECT_EQ(j["diameter"], 3);
  EXPECT_EQ(j["transmissions"], (std::vector<int>{6, 4, 4, 6}));
}

TEST(Cli, ComputeFromFile) {
  const auto path = TempFile("condiam_cli_one.g6", ">>graph6<<Ch\n");
  const auto r = Invoke({"compute", "--input", path.string(), "--diameter"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
}

TEST(Cli, FamilyEmitsParsableGraph6) {
  const auto r = Invoke({"family", "--kind", "double", "--n", "11", "--i", "3", "--j", "7"});
  ASSERT_EQ(r.code, 0);
  const std::string g6 = r.out.substr(0, r.out.size() - 1);
  EXPECT_EQ(parse_graph6(g6), tree_double(11, 3, 7));
  const auto w = Invoke({"compute", "--g6", g6, "--wiener"});
  EXPECT_EQ(w.out, "192\n");
}

TEST(Cli, FamilyJson) {
  const auto r = Invoke({"family", "--kind", "single", "--n", "7", "--i", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["wiener"], 50);
  EXPECT_EQ(j["edges"].size(), 6u);
}

TEST(Cli, CondiamWithWitness) {
  const auto r = Invoke({"condiam", "--g6", "Ch", "--s", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], 1);
  EXPECT_EQ(j["witness"]["V1"], (std::vector<int>{0, 1}));
  EXPECT_EQ(j["witness"]["V2"], (std::vector<int>{2, 3}));
  const auto small = Invoke({"condiam", "--g6", "Bw", "--s", "2"});
  EXPECT_EQ(small.code, 0);
  EXPECT_EQ(small.out, "0\n");
}

TEST(Cli, VerifyMatchExitsZero) {
  const auto r = Invoke({"verify", "--c", "-1", "--s", "2", "--n", "8", "--source", "trees"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto cert = parse_certificate(r.out);
  EXPECT_EQ(cert.status, AuditStatus::kMatchUnique);
}

TEST(Cli, VerifyTieExitsOne) {
  const auto r = Invoke({"verify", "--c", "1", "--s", "2", "--n", "10", "--source", "trees"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(parse_certificate(r.out).status, AuditStatus::kTie);
}

TEST(Cli, VerifyCsv) {
  const auto r = Invoke({"verify", "--c", "0", "--s", "2", "--n", "7", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, std::string(kCertificateCsvHeader) + "\n0,2,7,3,6,50,MATCH_UNIQUE\n");
}

TEST(Cli, VerifyOutFileReportsStatus) {
  const auto path = std::filesystem::temp_directory_path() / "condiam_cli_cert.json";
  const auto r = Invoke({"verify", "--c", "0", "--s", "1", "--n", "6", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "MATCH_UNIQUE\n");
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_EQ(parse_certificate(body.str()).status, AuditStatus::kMatchUnique);
}

TEST(Cli, VerifyHypothesisViolationIsUsageError) {
  const auto r = Invoke({"verify", "--c", "0", "--s", "2", "--n", "6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, SweepFromGraph6Corpus) {
  const auto path = TempFile("condiam_cli_corpus.g6", "Ch\nCr\nCF\n");
  const auto r = Invoke({"sweep", "--s", "1", "--target", "3", "--source", "g6:" + path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["class_size"], 1);
  EXPECT_EQ(j["max_wiener"], 10);
}

TEST(Cli, SweepCorruptCorpusNamesTheLine) {
  const auto path = TempFile("condiam_cli_bad.g6", "Ch\nCh\nC\x1f\n");
  const auto strict = Invoke({"sweep", "--s", "1", "--target", "3", "--source", "g6:" + path.string()});
  EXPECT_EQ(strict.code, 2);
  EXPECT_NE(strict.err.find("line 3"), std::string::npos);
  const auto lenient = Invoke({"sweep", "--s", "1", "--target", "3", "--lenient",
                            "--source", "g6:" + path.string()});
  EXPECT_EQ(lenient.code, 0);
}

TEST(Cli, AuditCsvTable) {
  const auto r = Invoke({"audit", "--c", "0", "--s-max", "1", "--n-max", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kCertificateCsvHeader);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_NE(line.find("MATCH_UNIQUE"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 4);  // n = 5..8
}

TEST(Cli, AuditFlagsTies) {
  const auto r = Invoke({"audit", "--c", "1", "--s-max", "1", "--n-max", "7", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["status"], "TIE");
}

TEST(Cli, TransformCheckPasses) {
  const auto r = Invoke({"transform-check", "--trials", "50", "--max-order", "12", "--seed", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 counterexamples"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, 2);
  EXPECT_EQ(Invoke({"bogus"}).code, 2);
  EXPECT_EQ(Invoke({"compute", "--g6", "Bw", "--frobnicate"}).code, 2);
  EXPECT_EQ(Invoke({"compute", "--g6", "B\x1f"}).code, 2);
  EXPECT_EQ(Invoke({"compute", "--g6", "Bw", "--format", "xml"}).code, 2);
  EXPECT_EQ(Invoke({"compute", "--g6", "B_"}).code, 2);  // disconnected
  EXPECT_EQ(Invoke({"verify", "--c", "2", "--s", "1", "--n", "9"}).code, 2);
  EXPECT_EQ(Invoke({"family", "--kind", "spiral", "--n", "5"}).code, 2);
  EXPECT_EQ(Invoke({"condiam", "--g6", "Bw", "--s", "0"}).code, 2);
  EXPECT_EQ(Invoke({"sweep", "--s", "1", "--target", "1", "--source", "g6:/nonexistent/x"}).code, 2);
}

TEST(Cli, Help) {
  const auto r = Invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace condiam
