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

#include "stabinv/reference.hpp"

#include <utility>
#include <vector>

namespace stabinv::reference {

std::size_t rank(const gf2::GF2Matrix& m) {
  std::vector<gf2::BitVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_bits(r));
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < rows.size(); ++c) {
    std::size_t p = rk;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rk]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rk || !rows[r][c]) continue;
      for (std::size_t j = c; j < m.cols(); ++j) rows[r][j] ^= rows[rk][j];
    }
    ++rk;
  }
  return rk;
}

invariants::Fingerprint fingerprint(const stabilizer::GeneratorMatrix& s, std::size_t r_max) {
  invariants::Fingerprint out{s.n(), r_max, {}};
  for (std::size_t r = 2; r <= r_max; ++r) {
    const auto trees = trees::enumerate_trees(r);
    const auto count = invariants::tuple_count(s.n(), r);
    if (!count) throw BudgetExceeded("reference::fingerprint: tuple count overflows");
    for (std::uint64_t i = 0; i < *count; ++i) {
      const auto t = invariants::tuple_at(trees, s.n(), i);
      out.records.push_back({r, t.id(), invariants::invariant_dim(s, t)});
    }
  }
  return out;
}

oracle::DyadicValue trace_permuted_product(const oracle::IndexPermutation& p,
                                           std::span<const oracle::ExactOperator> copies) {
  if (copies.size() != p.copies) throw DimensionError("reference trace: need one operator per copy");
  int scale = 0;
  for (const auto& op : copies) {
    if (op.qubits() != p.qubits) throw DimensionError("reference trace: operator qubit count differs");
    scale += op.scale();
  }
  const std::size_t n = p.qubits;
  oracle::GaussInt sum{};
  for (std::size_t j = 0; j < p.image.size(); ++j) {
    oracle::GaussInt prod{1, 0};
    for (std::size_t c = 0; c < p.copies; ++c) {
      const std::size_t shift = (p.copies - 1 - c) * n;
      const std::size_t row = (j >> shift) & ((std::size_t{1} << n) - 1);
      const std::size_t col = (p.image[j] >> shift) & ((std::size_t{1} << n) - 1);
      prod = prod * copies[c].at(row, col);
    }
    sum += prod;
  }
  return {sum, scale};
}

}  // namespace stabinv::reference
