// Copyright 2026 The stabinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabinv/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "stabinv/invariants.hpp"
#include "stabinv/io.hpp"

namespace stabinv::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("stabinv_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "stabinv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  Json output() const { return Json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const char* const kEdge = "2 2\n01\n10\n10\n01\n";
const char* const kPlus = "pauli\nXI\nIX\n";

TEST_F(CliTest, ValidateGraphCode) {
  EXPECT_EQ(run_cli({"validate", "--code", file("edge.txt", kEdge)}), kExitOk);
  EXPECT_EQ(output().dump(), "{\"n\":2,\"k\":2,\"status\":\"ok\"}");
}

TEST_F(CliTest, ValidateViolationAndParseErrors) {
  EXPECT_EQ(run_cli({"validate", "--code", file("bad.txt", "pauli\nXI\nZI\n")}), kExitViolation);
  EXPECT_EQ(output()["status"], "not-self-orthogonal");
  EXPECT_EQ(run_cli({"validate", "--code", file("short.txt", "2 2\n01\n10\n")}), kExitUsage);
  EXPECT_NE(err_.str().find("line 4"), std::string::npos) << err_.str();
  EXPECT_EQ(run_cli({"validate", "--code", (dir_ / "missing.txt").string()}), kExitUsage);
  EXPECT_EQ(run_cli({"validate", "--code", file("p.txt", kPlus), "--format", "bits"}), kExitUsage);
  EXPECT_EQ(run_cli({"validate", "--code", file("p2.txt", "XI\nIX\n"), "--format", "pauli"}), kExitOk);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}), kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}), kExitUsage);
  EXPECT_EQ(run_cli({"validate"}), kExitUsage);
  EXPECT_EQ(run_cli({"validate", "--code", "x", "--format", "json"}), kExitUsage);
  EXPECT_EQ(run_cli({"--help"}), kExitOk);
}

TEST_F(CliTest, InvariantTreesAndOmega) {
  const auto code = file("edge.txt", kEdge);
  EXPECT_EQ(run_cli({"invariant", "--code", code, "--trees", "(L());(L())"}), kExitOk);
  EXPECT_EQ(output().dump(), "{\"r\":2,\"tuple\":\"(L());(L())\",\"dim\":0}");
  EXPECT_EQ(run_cli({"invariant", "--code", code, "--trees", "(R())"}), kExitOk);
  EXPECT_EQ(output()["dim"], 2);

  const auto plus = file("plus.txt", kPlus);
  EXPECT_EQ(run_cli({"invariant", "--code", plus, "--omega", "1"}), kExitOk);
  EXPECT_EQ(output()["dim"], 1);
  EXPECT_EQ(output()["tuple"], "(R());(L())");
}

TEST_F(CliTest, OmegaMatchesLibrary) {
  const auto s = stabilizer::random_subcode(3, 2, 42);
  std::ostringstream text;
  io::write_code(text, s);
  const auto code = file("c.txt", text.str());
  EXPECT_EQ(run_cli({"invariant", "--code", code, "--omega", "1,3"}), kExitOk);
  EXPECT_EQ(output()["dim"].get<std::size_t>(), invariants::degree2_dim(s, {0, 2}));
}

TEST_F(CliTest, InvariantErrors) {
  const auto code = file("edge.txt", kEdge);
  EXPECT_EQ(run_cli({"invariant", "--code", code, "--trees", "all:2"}), kExitUsage);
  EXPECT_EQ(run_cli({"invariant", "--code", code, "--trees", "(L());(L());(L())"}), kExitUsage);
  EXPECT_EQ(run_cli({"invariant", "--code", code}), kExitUsage);
  EXPECT_EQ(run_cli({"invariant", "--code", code, "--omega", "5"}), kExitUsage);
  std::string deep = "()";
  for (int i = 0; i < 70; ++i) deep = "(R" + deep + ")";
  EXPECT_EQ(run_cli({"invariant", "--code", code, "--trees", deep}), kExitBudget);
  const auto tree_file = file("t.trees", "# tuple\n(R())\n(L())\n");
  EXPECT_EQ(run_cli({"invariant", "--code", code, "--trees", "@" + tree_file}), kExitOk);
  EXPECT_EQ(output()["tuple"], "(R());(L())");
}

TEST_F(CliTest, FingerprintJsonAndFile) {
  const auto code = file("edge.txt", kEdge);
  EXPECT_EQ(run_cli({"fingerprint", "--code", code, "--rmax", "3"}), kExitOk);
  const std::string first = out_.str();
  const auto j = output();
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["records"].size(), 29u);
  EXPECT_EQ(run_cli({"fingerprint", "--code", code, "--rmax", "3"}), kExitOk);
  EXPECT_EQ(out_.str(), first);

  const auto out_path = (dir_ / "fp.json").string();
  EXPECT_EQ(run_cli({"fingerprint", "--code", code, "--rmax", "3", "--out", out_path}), kExitOk);
  EXPECT_EQ(io::read_file(out_path), first);
  EXPECT_EQ(run_cli({"fingerprint", "--code", code, "--rmax", "3", "--table"}), kExitOk);
  EXPECT_NE(out_.str().find("records 29"), std::string::npos);

  EXPECT_EQ(run_cli({"fingerprint", "--code", code, "--rmax", "1"}), kExitUsage);
  EXPECT_EQ(run_cli({"fingerprint", "--code", code, "--rmax", "4", "--max-tuples", "10"}), kExitBudget);
  EXPECT_EQ(run_cli({"fingerprint", "--code", code, "--max-tuples", "0"}), kExitUsage);
}

TEST_F(CliTest, Compare) {
  const auto plus = file("plus.txt", kPlus);
  const auto edge = file("edge.txt", kEdge);
  EXPECT_EQ(run_cli({"compare", "--code", plus, "--code", plus, "--rmax", "3"}), kExitOk);
  EXPECT_EQ(output()["verdict"], "indistinguishable at r <= 3");

  EXPECT_EQ(run_cli({"compare", "--code", plus, "--code", edge, "--rmax", "2"}), kExitViolation);
  const auto j = output();
  EXPECT_EQ(j["verdict"], "distinguished");
  EXPECT_EQ(j["first_difference"]["dim_a"], 1);
  EXPECT_EQ(j["first_difference"]["dim_b"], 0);

  // LC image of the edge: Hadamard on qubit 1.
  const auto lc = file("lc.txt", "pauli\nXX\nZZ\n");
  EXPECT_EQ(run_cli({"compare", "--code", edge, "--code", lc}), kExitOk);

  const auto three = file("three.txt", "pauli 3\n");
  EXPECT_EQ(run_cli({"compare", "--code", plus, "--code", three}), kExitUsage);
  EXPECT_EQ(run_cli({"compare", "--code", plus}), kExitUsage);
}

TEST_F(CliTest, CompareGlobal) {
  const auto a = file("a.txt", "pauli\nZXI\nXZI\nIIX\n");
  const auto b = file("b.txt", "pauli\nXII\nIZX\nIXZ\n");
  EXPECT_EQ(run_cli({"compare", "--code", a, "--code", b, "--rmax", "2"}), kExitViolation);
  EXPECT_EQ(run_cli({"compare", "--code", a, "--code", b, "--rmax", "2", "--global"}), kExitOk);
  const auto j = output();
  EXPECT_EQ(j["verdict"], "indistinguishable at r <= 2");
  EXPECT_EQ(j["permutation"].size(), 3u);
}

TEST_F(CliTest, OracleCheck) {
  EXPECT_EQ(run_cli({"oracle-check", "--suite", "theorem1", "--max-n", "2", "--max-r", "3"}), kExitOk);
  const auto j = output();
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["suites"][0]["name"], "theorem1");
  EXPECT_EQ(j["suites"][0]["status"], "pass");

  EXPECT_EQ(run_cli({"oracle-check", "--suite", "lemma2", "--max-r", "5"}), kExitOk);
  EXPECT_EQ(output()["suites"][0]["status"], "pass");

  EXPECT_EQ(run_cli({"oracle-check", "--max-n", "0", "--max-r", "0"}), kExitOk);
  EXPECT_EQ(output()["suites"].size(), 6u);
  for (const auto& s : output()["suites"]) EXPECT_EQ(s["status"], "skipped");
  EXPECT_NE(err_.str().find("warning"), std::string::npos);

  EXPECT_EQ(run_cli({"oracle-check", "--suite", "nope"}), kExitUsage);
}

TEST_F(CliTest, OracleCheckIsByteIdentical) {
  const std::vector<std::string> args{"oracle-check", "--max-n", "2", "--max-r", "2", "--seed", "9"};
  EXPECT_EQ(run_cli(args), kExitOk);
  const std::string first = out_.str();
  EXPECT_EQ(run_cli(args), kExitOk);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(CliTest, BudgetEnvironment) {
  ::setenv("STABINV_BUDGET_MB", "abc", 1);
  EXPECT_EQ(run_cli({"oracle-check", "--suite", "lemma1", "--max-n", "1"}), kExitUsage);
  ::setenv("STABINV_BUDGET_MB", "1", 1);
  EXPECT_EQ(run_cli({"oracle-check", "--suite", "theorem1", "--max-n", "2", "--max-r", "2"}), kExitOk);
  EXPECT_EQ(output()["suites"][0]["status"], "pass");
  ::unsetenv("STABINV_BUDGET_MB");
  EXPECT_EQ(run_cli({"oracle-check", "--suite", "theorem1", "--max-n", "3", "--max-dim", "8"}), kExitOk);
  EXPECT_EQ(output()["suites"][0]["status"], "skipped");
}

}  // namespace
}  // namespace stabinv::cli
