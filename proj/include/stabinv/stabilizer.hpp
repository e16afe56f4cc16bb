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

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabinv/gf2.hpp"

namespace stabinv::stabilizer {

using gf2::BitVector;
using gf2::GF2Matrix;

/// Sorted set of 0-based qubit indices.
using QubitSet = std::vector<std::size_t>;

QubitSet complement(const QubitSet& omega, std::size_t n);

/// Binary generator matrix of an n-qubit stabilizer code: a 2n x k matrix
/// whose columns (u; v) encode the generators sigma_(u,v). Rows 0..n-1 hold
/// the Z parts u, rows n..2n-1 the X parts v.
///
/// Construction only checks the row count is even; use validate() for full
/// rank and self-orthogonality. Two codes are the same when their column
/// spaces agree, see same_code_space().
class GeneratorMatrix {
 public:
  GeneratorMatrix() = default;
  explicit GeneratorMatrix(GF2Matrix matrix);
  /// The k = 0 code on n qubits.
  static GeneratorMatrix trivial(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t k() const { return s_.cols(); }
  const GF2Matrix& matrix() const { return s_; }
  BitVector generator(std::size_t j) const { return s_.col_bits(j); }

  bool operator==(const GeneratorMatrix& other) const = default;

 private:
  std::size_t n_ = 0;
  GF2Matrix s_;
};

enum class Violation { kNone, kBadShape, kNotFullRank, kNotSelfOrthogonal };

std::string_view violation_name(Violation v);

struct ValidationReport {
  Violation violation = Violation::kNone;
  std::string detail;
  bool ok() const { return violation == Violation::kNone; }
};

/// Checks k <= n, rank k and S^T P S = 0, reporting the first failure.
ValidationReport validate(const GeneratorMatrix& s);

/// The 2n x 2n matrix P = [0 I; I 0].
GF2Matrix symplectic_form(std::size_t n);

/// a^T P b. Zero exactly when sigma_a and sigma_b commute.
int symplectic_product(const BitVector& a, const BitVector& b);

/// Rows i and n+i of S, in that order (a 2 x k matrix).
GF2Matrix qubit_subblock(const GeneratorMatrix& s, std::size_t qubit);

/// Qubits i with (v_i, v_{n+i}) != (0, 0).
QubitSet support(const BitVector& v);

/// Generator matrix of the reduced code on `omega`: a basis of the codewords
/// supported inside omega, with the coordinate pairs outside omega removed.
GeneratorMatrix restrict_to(const GeneratorMatrix& s, const QubitSet& omega);

/// Symmetric, zero-diagonal adjacency matrix of a simple graph.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t n = 0) : theta_(n, n) {}
  /// Throws std::invalid_argument unless square, symmetric and loop-free.
  static AdjacencyMatrix from_matrix(GF2Matrix theta);
  static AdjacencyMatrix from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  /// Graph number `index` among the 2^(n(n-1)/2) graphs on n vertices; bit
  /// e of `index` is the e-th pair (i < j) in row-major order.
  static AdjacencyMatrix from_index(std::size_t n, std::uint64_t index);
  static std::uint64_t graph_count(std::size_t n);

  std::size_t n() const { return theta_.rows(); }
  const GF2Matrix& matrix() const { return theta_; }
  bool edge(std::size_t i, std::size_t j) const { return theta_.get(i, j); }

 private:
  GF2Matrix theta_;
};

/// S = [theta; I].
GeneratorMatrix graph_generator(const AdjacencyMatrix& theta);

/// Invertible 2 x 2 binary matrix [a b; c d] acting on one qubit's (u, v).
struct CliffordBlock {
  std::uint8_t a = 1, b = 0, c = 0, d = 1;

  bool invertible() const { return ((a & d) ^ (b & c)) & 1u; }
  CliffordBlock inverse() const { return {d, b, c, a}; }
  std::pair<std::uint8_t, std::uint8_t> apply(std::uint8_t u, std::uint8_t v) const {
    return {static_cast<std::uint8_t>((a & u) ^ (b & v)), static_cast<std::uint8_t>((c & u) ^ (d & v))};
  }
  bool operator==(const CliffordBlock&) const = default;

  /// The six invertible blocks, identity first.
  static const std::array<CliffordBlock, 6>& all();
};

/// Local Clifford operation in binary form: one invertible block per qubit.
class LocalCliffordOp {
 public:
  /// Throws std::invalid_argument if a block is singular.
  explicit LocalCliffordOp(std::vector<CliffordBlock> blocks);
  static LocalCliffordOp identity(std::size_t n);

  std::size_t n() const { return blocks_.size(); }
  const CliffordBlock& block(std::size_t i) const { return blocks_[i]; }
  LocalCliffordOp inverse() const;
  /// The 2n x 2n matrix [A B; C D] with diagonal blocks.
  GF2Matrix full_matrix() const;

 private:
  std::vector<CliffordBlock> blocks_;
};

/// Q S. Throws DimensionError when qubit counts differ.
GeneratorMatrix apply_local_clifford(const LocalCliffordOp& q, const GeneratorMatrix& s);

LocalCliffordOp random_local_clifford(std::size_t n, std::mt19937_64& rng);
AdjacencyMatrix random_graph(std::size_t n, std::mt19937_64& rng);

/// Random theta, the first k columns of [theta; I], then a random local
/// Clifford. Bit-identical for equal (n, k, seed).
GeneratorMatrix random_code(std::size_t n, std::size_t k, std::uint64_t seed);

/// Like random_code but keeps a random k-dimensional subspace of the graph
/// code rather than its first k generators.
GeneratorMatrix random_subcode(std::size_t n, std::size_t k, std::uint64_t seed);

/// Column spaces equal.
bool same_code_space(const GeneratorMatrix& a, const GeneratorMatrix& b);

/// Reduced column echelon form of S; equal for codes with equal column
/// spaces. A convenience normal form only.
GeneratorMatrix canonical_form(const GeneratorMatrix& s);

/// S M for a k x k matrix M.
GeneratorMatrix change_basis(const GeneratorMatrix& s, const GF2Matrix& m);

/// Relabels qubits: qubit i of the result is qubit perm[i] of s.
GeneratorMatrix permute_qubits(const GeneratorMatrix& s, const std::vector<std::size_t>& perm);

/// All 2^k codewords S x, by x in increasing order.
std::vector<BitVector> code_space_elements(const GeneratorMatrix& s);

/// "XZZI"-style strings, one per generator; X=(0,1), Z=(1,0), Y=(1,1) per
/// qubit (u, v). An optional leading '+' or '-' is accepted and ignored.
/// Throws ParseError on unknown letters or unequal lengths.
GeneratorMatrix from_pauli_strings(const std::vector<std::string>& generators, std::size_t n = 0);
std::string to_pauli_string(const BitVector& column);

}  // namespace stabinv::stabilizer
