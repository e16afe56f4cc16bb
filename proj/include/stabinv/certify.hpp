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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stabinv/errors.hpp"

// Oracle certification suites: the binary engine checked against exact
// dense-operator computations over small exhaustive or seeded families.
namespace stabinv::certify {

using Json = nlohmann::ordered_json;

struct SuiteLimits {
  std::size_t max_n = 2;
  std::size_t max_r = 3;
  /// Random codes per (n, k) for the theorem suites.
  std::size_t codes = 20;
  std::uint64_t seed = 1;
  Budget budget;
};

enum class Status { kPass, kFail, kSkipped };
std::string_view status_name(Status s);

struct SuiteReport {
  std::string name;
  Status status = Status::kPass;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// At most kMaxCounterexamples entries, each complete (code, tuple, values).
  std::vector<Json> counterexamples;
  std::string warning;
};

inline constexpr std::size_t kMaxCounterexamples = 10;

const std::vector<std::string>& suite_names();

/// Runs one suite. Exhausted budgets and empty limits give kSkipped with a
/// warning; std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteLimits& limits);

Json to_json(const SuiteReport& report);

}  // namespace stabinv::certify
