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

#include <ostream>

// Command-line front end. Exit codes: 0 success, indistinguishable or pass;
// 1 distinguishing or violation; 2 usage or parse error; 3 budget exceeded.
namespace stabinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stabinv::cli
