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

#include "stabinv/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace stabinv::invariants {

namespace {

// Per-qubit block kron(R_B^T, S_i^T) for every tree of one degree.
std::vector<std::vector<gf2::GF2Matrix>> block_table(const GeneratorMatrix& s,
                                                     const std::vector<BinaryTree>& degree_trees) {
  std::vector<gf2::GF2Matrix> r_transposed;
  r_transposed.reserve(degree_trees.size());
  for (const auto& tree : degree_trees) r_transposed.push_back(trees::r_matrix(tree).transpose());
  std::vector<std::vector<gf2::GF2Matrix>> table(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) {
    const gf2::GF2Matrix sub = stabilizer::qubit_subblock(s, i);
    for (const auto& rt : r_transposed) table[i].push_back(gf2::kron(rt, sub));
  }
  return table;
}

std::vector<std::size_t> tuple_digits(std::size_t n, std::uint64_t radix, std::uint64_t index) {
  std::vector<std::size_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = static_cast<std::size_t>(index % radix);
    index /= radix;
  }
  return digits;
}

}  // namespace

TreeTuple::TreeTuple(std::vector<BinaryTree> trees) : trees_(std::move(trees)) {
  if (trees_.empty()) throw std::invalid_argument("TreeTuple: needs at least one qubit");
  const std::size_t r = trees_.front().size();
  for (const auto& t : trees_) {
    if (t.size() != r) throw std::invalid_argument("TreeTuple: trees have different node counts");
  }
}

TreeTuple TreeTuple::uniform(std::size_t n, const BinaryTree& tree) {
  return TreeTuple(std::vector<BinaryTree>(n, tree));
}

TreeTuple TreeTuple::parse(std::string_view text) {
  std::vector<BinaryTree> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t end = text.find(';', pos);
    out.push_back(BinaryTree::parse(text.substr(pos, end == std::string_view::npos ? end : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return TreeTuple(std::move(out));
}

std::string TreeTuple::id() const {
  std::string out;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i > 0) out.push_back(';');
    out += trees_[i].serialize();
  }
  return out;
}

TreeTuple omega_tuple(std::size_t n, const QubitSet& omega) {
  const BinaryTree left = BinaryTree::identity_tree(2);
  const BinaryTree right = BinaryTree::right_chain(2);
  std::vector<BinaryTree> out(n, left);
  for (std::size_t i : omega) {
    if (i >= n) throw std::out_of_range("omega_tuple: qubit index out of range");
    out[i] = right;
  }
  return TreeTuple(std::move(out));
}

gf2::GF2Matrix invariant_matrix(const GeneratorMatrix& s, const TreeTuple& t) {
  if (t.qubits() != s.n()) {
    throw DimensionError("invariant: tuple has " + std::to_string(t.qubits()) + " trees but code has " +
                         std::to_string(s.n()) + " qubits");
  }
  std::vector<gf2::GF2Matrix> blocks;
  blocks.reserve(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) {
    blocks.push_back(gf2::kron(trees::r_matrix(t[i]).transpose(), stabilizer::qubit_subblock(s, i)));
  }
  return gf2::stack_rows(blocks, t.degree() * s.k());
}

std::size_t invariant_dim(const GeneratorMatrix& s, const TreeTuple& t) {
  return gf2::kernel_dimension(invariant_matrix(s, t));
}

std::size_t degree2_dim(const GeneratorMatrix& s, const QubitSet& omega) {
  std::vector<std::size_t> rows;
  for (std::size_t j : stabilizer::complement(omega, s.n())) {
    rows.push_back(j);
    rows.push_back(s.n() + j);
  }
  return gf2::kernel_dimension(gf2::select_rows(s.matrix(), rows));
}

std::size_t theorem2_dim(const GeneratorMatrix& s, const TreeTuple& t, std::uint64_t max_enumeration) {
  const std::size_t n = s.n();
  const std::size_t k = s.k();
  const std::size_t r = t.degree();
  if (t.qubits() != n) throw DimensionError("theorem2_dim: tuple and code disagree on qubit count");
  if (n > 32) throw BudgetExceeded("theorem2_dim: supports more than 32 qubits are not enumerable");
  if (r * k >= 63 || (std::uint64_t{1} << (r * k)) > max_enumeration) {
    throw BudgetExceeded("theorem2_dim: 2^(r*k) = 2^" + std::to_string(r * k) + " tuples exceeds the enumeration budget");
  }

  // Each distinct path with the mask of qubits whose tree contains it.
  struct PathConstraint {
    std::uint64_t copies = 0;     // bit j set when node j is on the path
    std::uint64_t forbidden = 0;  // qubits outside omega_p
  };
  std::vector<std::vector<std::size_t>> seen;
  std::vector<PathConstraint> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& path : trees::maximal_right_paths(t[i]).paths) {
      auto it = std::find(seen.begin(), seen.end(), path);
      std::size_t idx = static_cast<std::size_t>(it - seen.begin());
      if (it == seen.end()) {
        seen.push_back(path);
        PathConstraint pc;
        for (std::size_t node : path) pc.copies |= std::uint64_t{1} << node;
        constraints.push_back(pc);
      }
      constraints[idx].forbidden |= std::uint64_t{1} << i;
    }
  }

  // Codewords S x as 2n-bit masks: bit i is u_i, bit n+i is v_i.
  std::vector<std::uint64_t> codeword(std::size_t{1} << k, 0);
  for (std::size_t x = 1; x < codeword.size(); ++x) {
    const std::size_t j = static_cast<std::size_t>(std::countr_zero(x));
    std::uint64_t col = 0;
    for (std::size_t row = 0; row < 2 * n; ++row) {
      if (s.matrix().get(row, j)) col |= std::uint64_t{1} << row;
    }
    codeword[x] = codeword[x & (x - 1)] ^ col;
  }
  const std::uint64_t low = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  const std::uint64_t kmask = (std::uint64_t{1} << k) - 1;

  std::uint64_t count = 0;
  std::vector<std::uint64_t> ys(r);
  const std::uint64_t total = std::uint64_t{1} << (r * k);
  for (std::uint64_t x = 0; x < total; ++x) {
    for (std::size_t j = 0; j < r; ++j) ys[j] = codeword[(x >> (j * k)) & kmask];
    bool ok = true;
    for (const auto& pc : constraints) {
      std::uint64_t sum = 0;
      for (std::uint64_t m = pc.copies; m != 0; m &= m - 1) sum ^= ys[static_cast<std::size_t>(std::countr_zero(m))];
      const std::uint64_t supp = (sum | (sum >> n)) & low;
      if (supp & pc.forbidden) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  // The solutions form a linear space.
  if (!std::has_single_bit(count)) throw std::logic_error("theorem2_dim: solution count is not a power of two");
  return static_cast<std::size_t>(std::countr_zero(count));
}

std::optional<TreeTuple> reduce_singleton(const TreeTuple& t) {
  const std::size_t r = t.degree();
  if (r < 2) return std::nullopt;
  for (std::size_t node = r; node-- > 0;) {
    const bool common = std::all_of(t.trees().begin(), t.trees().end(), [node](const BinaryTree& b) {
      return !b.is_right_son(node) && b.right(node) == BinaryTree::kNoChild;
    });
    if (!common) continue;
    std::vector<BinaryTree> reduced;
    reduced.reserve(t.qubits());
    for (const auto& b : t.trees()) reduced.push_back(trees::delete_singleton(b, node));
    return TreeTuple(std::move(reduced));
  }
  return std::nullopt;
}

TreeTuple pad_degree(const TreeTuple& t) {
  std::vector<BinaryTree> padded;
  padded.reserve(t.qubits());
  for (const auto& b : t.trees()) padded.push_back(trees::append_singleton(b));
  return TreeTuple(std::move(padded));
}

std::optional<std::uint64_t> tuple_count(std::size_t n, std::size_t r) {
  const std::uint64_t c = trees::catalan(r);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > (~std::uint64_t{0}) / c) return std::nullopt;
    total *= c;
  }
  return total;
}

TreeTuple tuple_at(const std::vector<BinaryTree>& degree_trees, std::size_t n, std::uint64_t index) {
  std::vector<BinaryTree> out;
  out.reserve(n);
  for (std::size_t d : tuple_digits(n, degree_trees.size(), index)) out.push_back(degree_trees[d]);
  return TreeTuple(std::move(out));
}

Fingerprint fingerprint(const GeneratorMatrix& s, std::size_t r_max, std::uint64_t max_tuples) {
  if (r_max < 2) throw std::invalid_argument("fingerprint: r_max must be at least 2");
  if (s.n() == 0) throw std::invalid_argument("fingerprint: code has no qubits");
  std::uint64_t total = 0;
  for (std::size_t r = 2; r <= r_max; ++r) {
    const auto count = tuple_count(s.n(), r);
    if (!count || *count > max_tuples - std::min(total, max_tuples)) {
      throw BudgetExceeded("fingerprint: more than " + std::to_string(max_tuples) + " tuples up to degree " +
                           std::to_string(r_max));
    }
    total += *count;
  }

  Fingerprint fp{s.n(), r_max, {}};
  fp.records.resize(static_cast<std::size_t>(total));
  std::size_t offset = 0;
  for (std::size_t r = 2; r <= r_max; ++r) {
    const std::vector<BinaryTree> degree_trees = trees::enumerate_trees(r);
    const auto table = block_table(s, degree_trees);
    const std::vector<std::string> names = [&] {
      std::vector<std::string> out;
      for (const auto& b : degree_trees) out.push_back(b.serialize());
      return out;
    }();
    const std::int64_t count = static_cast<std::int64_t>(*tuple_count(s.n(), r));
    const std::size_t n = s.n();
    const std::size_t cols = r * s.k();
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t idx = 0; idx < count; ++idx) {
      const auto digits = tuple_digits(n, degree_trees.size(), static_cast<std::uint64_t>(idx));
      std::vector<gf2::GF2Matrix> blocks;
      blocks.reserve(n);
      std::string id;
      for (std::size_t i = 0; i < n; ++i) {
        blocks.push_back(table[i][digits[i]]);
        if (i > 0) id.push_back(';');
        id += names[digits[i]];
      }
      InvariantRecord& rec = fp.records[offset + static_cast<std::size_t>(idx)];
      rec.r = r;
      rec.tuple = std::move(id);
      rec.dim = gf2::kernel_dimension(gf2::stack_rows(blocks, cols));
    }
    offset += static_cast<std::size_t>(count);
  }
  return fp;
}

Comparison compare(const Fingerprint& a, const Fingerprint& b) {
  if (a.n != b.n || a.r_max != b.r_max) {
    throw DimensionError("compare: fingerprints cover different ranges (n " + std::to_string(a.n) + " vs " +
                         std::to_string(b.n) + ", r_max " + std::to_string(a.r_max) + " vs " +
                         std::to_string(b.r_max) + ")");
  }
  if (a.records.size() != b.records.size()) throw DimensionError("compare: fingerprints are incomplete");
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    if (a.records[i] != b.records[i]) return {false, i};
  }
  return {true, std::nullopt};
}

GlobalComparison compare_global(const GeneratorMatrix& a, const GeneratorMatrix& b, std::size_t r_max,
                                std::uint64_t max_tuples) {
  if (a.n() != b.n()) throw DimensionError("compare_global: codes have different qubit counts");
  const std::size_t n = a.n();
  if (n > 8) throw BudgetExceeded("compare_global: qubit permutation search is limited to n <= 8");
  const Fingerprint fa = fingerprint(a, r_max, max_tuples);
  const Fingerprint fb = fingerprint(b, r_max, max_tuples);

  GlobalComparison out;
  out.local = compare(fa, fb);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool match = true;
    std::size_t offset = 0;
    for (std::size_t r = 2; r <= r_max && match; ++r) {
      const std::uint64_t radix = trees::catalan(r);
      const std::uint64_t count = *tuple_count(n, r);
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        // dim(b relabelled by perm, T) = dim(b, T') with T'[perm[i]] = T[i].
        const auto digits = tuple_digits(n, radix, idx);
        std::vector<std::size_t> moved(n);
        for (std::size_t i = 0; i < n; ++i) moved[perm[i]] = digits[i];
        std::uint64_t mapped = 0;
        for (std::size_t i = 0; i < n; ++i) mapped = mapped * radix + moved[i];
        if (fa.records[offset + idx].dim != fb.records[offset + static_cast<std::size_t>(mapped)].dim) {
          match = false;
          break;
        }
      }
      offset += static_cast<std::size_t>(count);
    }
    if (match) {
      out.candidate = true;
      out.permutation = perm;
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace stabinv::invariants
