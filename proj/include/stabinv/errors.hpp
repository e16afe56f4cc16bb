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
#include <stdexcept>
#include <string>

namespace stabinv {

/// Shapes or lengths of operands do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed one of the configured resource limits.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based; 0 means "unknown".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Explicit resource limits. Nothing is ever silently truncated: exceeding a
/// limit raises BudgetExceeded.
struct Budget {
  /// Largest dense operator dimension the oracle may touch (2^(n*r) for traces).
  std::uint64_t max_oracle_dim = 4096;
  /// Largest exhaustive enumeration (2^(r*k) tuples, 2^(n*r) matrices).
  std::uint64_t max_enumeration = std::uint64_t{1} << 20;
  /// Largest number of tree tuples a fingerprint sweep may evaluate.
  std::uint64_t max_tuples = 1'000'000;
  /// Largest degree accepted by single-invariant evaluation.
  std::size_t max_degree = 64;
  /// Memory cap for oracle buffers, in MiB.
  std::uint64_t memory_mb = 1024;
};

}  // namespace stabinv
