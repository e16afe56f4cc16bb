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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabinv/errors.hpp"
#include "stabinv/gf2.hpp"
#include "stabinv/invariants.hpp"
#include "stabinv/stabilizer.hpp"
#include "stabinv/trees.hpp"

// Exact dense-operator arithmetic used to certify the binary engine. Every
// value is a Gaussian integer over a power-of-two denominator; there is no
// floating point anywhere in this module.
//
// Bit order: qubit 0 is the most significant bit of a basis index. In an
// r-fold tensor power, copy 0 occupies the most significant n bits.
namespace stabinv::oracle {

using gf2::BitVector;
using invariants::TreeTuple;
using stabilizer::AdjacencyMatrix;
using stabilizer::GeneratorMatrix;

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  constexpr GaussInt conj() const { return {re, -im}; }
  constexpr GaussInt operator-() const { return {-re, -im}; }
  constexpr GaussInt& operator+=(GaussInt o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr bool operator==(GaussInt, GaussInt) = default;
};

/// value / 2^scale.
struct DyadicValue {
  GaussInt value;
  int scale = 0;

  bool is_real() const { return value.im == 0; }
  /// log2 of the value when it is a positive real power of two.
  std::optional<int> log2() const;
  friend bool operator==(const DyadicValue& a, const DyadicValue& b);
  friend DyadicValue operator*(const DyadicValue& a, const DyadicValue& b) {
    return {a.value * b.value, a.scale + b.scale};
  }
  std::string to_string() const;
};

/// Row-major 2 x 2 Gaussian-integer matrix.
using Matrix2 = std::array<GaussInt, 4>;

/// sigma_uv with sigma_00 = I, sigma_01 = X, sigma_10 = Z, sigma_11 = Y.
Matrix2 sigma_matrix(int u, int v);
/// tau_uv = sigma_uv except tau_11 = i sigma_y = [0 1; -1 0].
Matrix2 tau_matrix(int u, int v);
/// Entrywise parameterization (-1)^(a(b+x)) delta_{x+y,b} at (x, y). Equals
/// tau_ab^T: it differs from tau_matrix only at (1, 1), by sign.
Matrix2 tau_entry_matrix(int a, int b);

/// Dense 2^m x 2^m operator. Entries are stored numerators; the operator is
/// entries / 2^scale.
class ExactOperator {
 public:
  ExactOperator() = default;
  explicit ExactOperator(std::size_t qubits, int scale = 0);
  static ExactOperator identity(std::size_t qubits);
  static ExactOperator from_matrix2(const Matrix2& m);

  std::size_t qubits() const { return qubits_; }
  std::size_t dim() const { return std::size_t{1} << qubits_; }
  int scale() const { return scale_; }
  void set_scale(int scale) { scale_ = scale; }

  GaussInt& at(std::size_t r, std::size_t c) { return entries_[r * dim() + c]; }
  const GaussInt& at(std::size_t r, std::size_t c) const { return entries_[r * dim() + c]; }
  /// Entry as a dyadic value.
  DyadicValue value(std::size_t r, std::size_t c) const { return {at(r, c), scale_}; }

  /// Equal as rational matrices, whatever the scales.
  friend bool operator==(const ExactOperator& a, const ExactOperator& b);

 private:
  std::size_t qubits_ = 0;
  int scale_ = 0;
  std::vector<GaussInt> entries_ = std::vector<GaussInt>(1);
};

ExactOperator multiply(const ExactOperator& a, const ExactOperator& b);
ExactOperator add(const ExactOperator& a, const ExactOperator& b);
ExactOperator kron(const ExactOperator& a, const ExactOperator& b);
ExactOperator adjoint(const ExactOperator& a);
ExactOperator negate(const ExactOperator& a);
DyadicValue trace(const ExactOperator& a);

/// Throws BudgetExceeded when a 2^qubits operator breaks the dimension or
/// memory limits.
void check_operator_budget(std::size_t qubits, const Budget& budget);

/// Tensor product of sigma_(u_i v_i) / tau_(u_i v_i) factors.
ExactOperator pauli_op(const BitVector& u, const BitVector& v, const Budget& budget = {});
ExactOperator tau_op(const BitVector& u, const BitVector& v, const Budget& budget = {});
/// sigma_(u,v) for a stacked 2n-vector (u; v).
ExactOperator pauli_op(const BitVector& uv, const Budget& budget = {});

/// 2^-n times the sum of the 2^k group elements generated by the +1-phase
/// generators sigma_(s_j). With `negated`, generator j is -sigma_(s_j)
/// whenever negated[j] is set. Throws std::invalid_argument for invalid codes.
ExactOperator rho_from_code(const GeneratorMatrix& s, const Budget& budget = {});
ExactOperator rho_from_code(const GeneratorMatrix& s, const std::vector<bool>& negated, const Budget& budget = {});

/// 2^-n sum_x (-1)^(k_theta(x)) tau_(theta x, x), k_theta(x) = sum_{i<j} theta_ij x_i x_j.
ExactOperator rho_graph_formula(const AdjacencyMatrix& theta, const Budget& budget = {});

/// Basis-index map realizing T_Pi on n*r qubits: bit (copy c, qubit i) of
/// image[j] is bit (copy pi_i(c), qubit i) of j. As a matrix T e_j = e_image[j],
/// so Tr(T M) = sum_j M[j, image[j]].
struct IndexPermutation {
  std::size_t qubits = 0;
  std::size_t copies = 0;
  std::vector<std::uint32_t> image;

  bool is_bijection() const;
  IndexPermutation compose(const IndexPermutation& then) const;
};

IndexPermutation t_pi(const TreeTuple& t, const Budget& budget = {});
/// The 0/1 matrix of a permutation; for small checks only.
ExactOperator dense_permutation(const IndexPermutation& p, const Budget& budget = {});

/// Tr(T (X_0 x X_1 x ... x X_{r-1})) with one n-qubit operator per copy,
/// accumulated in parallel over basis-index ranges.
DyadicValue trace_permuted_product(const IndexPermutation& p, std::span<const ExactOperator> copies);

/// Tr(T_Pi rho^(x r)).
DyadicValue invariant_trace(const ExactOperator& rho, const TreeTuple& t, const Budget& budget = {});
DyadicValue invariant_trace(const GeneratorMatrix& s, const TreeTuple& t, const Budget& budget = {});

/// sum_x prod_c ops[c](x_c, x_{pi(c)}).
GaussInt a_generic(const trees::Permutation& pi, std::span<const Matrix2> ops);
/// a_generic over tau_entry_matrix(u_c, v_c) factors.
GaussInt a_direct(const trees::Permutation& pi, const BitVector& u, const BitVector& v);
/// 2^(r - dim V_B) (-1)^(u^T D_B^T v) when u, v lie in V_B, else 0.
GaussInt a_closed(const trees::BinaryTree& tree, const BitVector& u, const BitVector& v);

/// The space V_B(G): n x r matrices X, stored as r column masks (bit i is
/// qubit i), with S_i^T (sum_{j in p} x^(j)) = 0 for all i and p in R(B_i).
bool in_v_space(const AdjacencyMatrix& theta, const TreeTuple& t, std::span<const std::uint64_t> columns);

/// Q(X) = Tr X^T L(theta) X + Tr X_B^T theta X over GF(2), with L the strictly
/// lower triangle and (X_B)_ij = sum_k X_ik (D_{B_i})_kj.
int quadratic_form(const AdjacencyMatrix& theta, const TreeTuple& t, std::span<const std::uint64_t> columns);

struct Lemma4Result {
  bool pass = true;
  std::uint64_t space_size = 0;
  /// Column masks of the first X in V_B(G) with Q(X) = 1.
  std::optional<std::vector<std::uint64_t>> counterexample;
};

/// Enumerates all 2^(n r) matrices; BudgetExceeded past max_enumeration.
Lemma4Result lemma4_check(const AdjacencyMatrix& theta, const TreeTuple& t, const Budget& budget = {});

struct VSpaceSum {
  std::uint64_t size = 0;
  std::int64_t signed_sum = 0;  // sum of (-1)^Q(X) over V_B(G)
};
VSpaceSum v_space_sum(const AdjacencyMatrix& theta, const TreeTuple& t, const Budget& budget = {});

struct Lemma3Result {
  bool pass = true;
  DyadicValue trace;        // invariant_trace of the graph code
  VSpaceSum sum;            // over V_B(G)
  DyadicValue reference_trace;  // empty graph on the same n
  VSpaceSum reference_sum;
  std::string detail;
};

/// Checks trace * N = signed sum with N measured on the empty graph, and
/// that the signed sum equals |V_B(G)|.
Lemma3Result lemma3_check(const AdjacencyMatrix& theta, const TreeTuple& t, const Budget& budget = {});

/// A single-qubit Clifford as m / sqrt(2)^half_scale, with m built from H and S.
struct CliffordUnitary {
  Matrix2 m;
  int half_scale = 0;
};

/// Binary action of m / sqrt(2)^half_scale under conjugation; nullopt if it
/// does not map Paulis to signed Paulis.
std::optional<stabilizer::CliffordBlock> binary_action(const CliffordUnitary& u);
/// A unitary realizing the given block.
CliffordUnitary clifford_unitary(const stabilizer::CliffordBlock& block);

/// U rho U^dagger for the tensor product of clifford_unitary(q.block(i)).
ExactOperator conjugate_local(const ExactOperator& rho, const stabilizer::LocalCliffordOp& q,
                              const Budget& budget = {});

}  // namespace stabinv::oracle
