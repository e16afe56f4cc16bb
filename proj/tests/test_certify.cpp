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

#include "stabinv/certify.hpp"

#include <gtest/gtest.h>

namespace stabinv::certify {
namespace {

TEST(Suites, PassAtSmallLimits) {
  SuiteLimits lim;
  lim.max_n = 2;
  lim.max_r = 3;
  lim.codes = 6;
  for (const auto& name : suite_names()) {
    const auto rep = run_suite(name, lim);
    EXPECT_EQ(rep.status, Status::kPass) << name;
    EXPECT_GT(rep.cases, 0u) << name;
    EXPECT_TRUE(rep.counterexamples.empty());
  }
}

TEST(Suites, CaseCounts) {
  SuiteLimits lim;
  lim.max_n = 3;
  lim.max_r = 5;
  // sum_r Catalan(r) 4^r for r = 1..5.
  EXPECT_EQ(run_suite("lemma2", lim).cases, 4u + 2 * 16 + 5 * 64 + 14 * 256 + 42 * 1024);
  // 1 + 2 + 8 graphs.
  EXPECT_EQ(run_suite("lemma1", lim).cases, 11u);
}

TEST(Suites, ZeroLimitsSkip) {
  SuiteLimits lim;
  lim.max_n = 0;
  lim.max_r = 0;
  for (const auto& name : suite_names()) {
    const auto rep = run_suite(name, lim);
    EXPECT_EQ(rep.status, Status::kSkipped) << name;
    EXPECT_FALSE(rep.warning.empty());
  }
}

TEST(Suites, BudgetOverrunSkips) {
  SuiteLimits lim;
  lim.max_n = 3;
  lim.max_r = 3;
  lim.budget.max_oracle_dim = 16;
  const auto rep = run_suite("theorem1", lim);
  EXPECT_EQ(rep.status, Status::kSkipped);
  EXPECT_NE(rep.warning.find("budget"), std::string::npos);
  EXPECT_THROW(run_suite("lemma9", lim), std::invalid_argument);
}

TEST(Suites, ReportJson) {
  SuiteLimits lim;
  lim.max_n = 1;
  lim.max_r = 2;
  const auto j = to_json(run_suite("lemma4", lim));
  EXPECT_EQ(j.dump(), "{\"name\":\"lemma4\",\"status\":\"pass\",\"cases\":2,\"failures\":0,\"counterexamples\":[]}");
}

}  // namespace
}  // namespace stabinv::certify
