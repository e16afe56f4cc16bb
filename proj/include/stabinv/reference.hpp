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
#include <span>

#include "stabinv/gf2.hpp"
#include "stabinv/invariants.hpp"
#include "stabinv/oracle.hpp"

// Serial reference kernels. Straightforward and slow on purpose; the tests
// and benchmarks compare the parallel paths against these.
namespace stabinv::reference {

/// Rank by elimination on unpacked bit rows.
std::size_t rank(const gf2::GF2Matrix& m);

/// Fingerprint by calling invariant_dim tuple by tuple on one thread.
invariants::Fingerprint fingerprint(const stabilizer::GeneratorMatrix& s, std::size_t r_max);

/// Tr(T (X_0 x ... x X_{r-1})) by a single serial loop.
oracle::DyadicValue trace_permuted_product(const oracle::IndexPermutation& p,
                                           std::span<const oracle::ExactOperator> copies);

}  // namespace stabinv::reference
