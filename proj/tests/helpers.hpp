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

#include <cstdint>
#include <random>

#include "stabinv/gf2.hpp"

namespace stabinv::testing {

inline gf2::GF2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  gf2::GF2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1u);
  }
  return m;
}

// Number of x in F_2^cols with m x = 0, by enumeration (cols <= 20).
inline std::uint64_t brute_kernel_size(const gf2::GF2Matrix& m) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m.cols()); ++x) {
    bool zero = true;
    for (std::size_t r = 0; r < m.rows() && zero; ++r) {
      int acc = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) acc ^= m.get(r, c) & ((x >> c) & 1u);
      zero = acc == 0;
    }
    count += zero;
  }
  return count;
}

}  // namespace stabinv::testing
