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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabinv/errors.hpp"
#include "stabinv/gf2.hpp"
#include "stabinv/stabilizer.hpp"
#include "stabinv/trees.hpp"

namespace stabinv::invariants {

using stabilizer::GeneratorMatrix;
using stabilizer::QubitSet;
using trees::BinaryTree;

/// One binary tree per qubit, all on the same number of nodes.
class TreeTuple {
 public:
  /// Throws std::invalid_argument when empty or when degrees differ.
  explicit TreeTuple(std::vector<BinaryTree> trees);
  static TreeTuple uniform(std::size_t n, const BinaryTree& tree);
  /// "tree;tree;..." as produced by id().
  static TreeTuple parse(std::string_view text);

  std::size_t qubits() const { return trees_.size(); }
  std::size_t degree() const { return trees_.front().size(); }
  const BinaryTree& operator[](std::size_t i) const { return trees_[i]; }
  const std::vector<BinaryTree>& trees() const { return trees_; }

  /// Per-qubit serializations joined by ';'.
  std::string id() const;

  bool operator==(const TreeTuple& other) const = default;

 private:
  std::vector<BinaryTree> trees_;
};

/// Degree-2 tuple for omega: the right-son tree on qubits in omega, the
/// left-son tree elsewhere.
TreeTuple omega_tuple(std::size_t n, const QubitSet& omega);

/// Stack over qubits of kron(R_{B_i}^T, S_i^T); 2 * sum(t_i) rows, r*k columns.
gf2::GF2Matrix invariant_matrix(const GeneratorMatrix& s, const TreeTuple& t);

/// Kernel dimension of invariant_matrix. Throws DimensionError when the tuple
/// and code disagree on n.
std::size_t invariant_dim(const GeneratorMatrix& s, const TreeTuple& t);

/// dim { y in C_S : supp(y) within omega }, by rank.
std::size_t degree2_dim(const GeneratorMatrix& s, const QubitSet& omega);

/// Dimension of the tuple space
///   { (y1..yr) in C_S^r : supp(sum_{j in p} y_j) within omega_p for all p },
/// p over the union of the tuple's maximal right paths and omega_p the qubits
/// whose tree lacks p. Counted by enumerating all 2^(r k) tuples; throws
/// BudgetExceeded beyond `max_enumeration`.
std::size_t theorem2_dim(const GeneratorMatrix& s, const TreeTuple& t,
                         std::uint64_t max_enumeration = Budget{}.max_enumeration);

/// If some node i0 is a singleton maximal right path in every tree, deletes
/// the largest such i0 from each tree. Requires degree >= 2.
std::optional<TreeTuple> reduce_singleton(const TreeTuple& t);

/// Appends a fresh singleton node (label r+1) to every tree.
TreeTuple pad_degree(const TreeTuple& t);

/// Number of tuples of degree r on n qubits, Catalan(r)^n, or nullopt on
/// overflow.
std::optional<std::uint64_t> tuple_count(std::size_t n, std::size_t r);

/// Tuple number `index` in canonical order: mixed radix over
/// enumerate_trees(r), qubit 0 most significant.
TreeTuple tuple_at(const std::vector<BinaryTree>& degree_trees, std::size_t n, std::uint64_t index);

struct InvariantRecord {
  std::size_t r = 0;
  std::string tuple;
  std::size_t dim = 0;
  bool operator==(const InvariantRecord&) const = default;
};

/// Every kernel dimension for r = 2..r_max, ordered by (r, tuple).
struct Fingerprint {
  std::size_t n = 0;
  std::size_t r_max = 0;
  std::vector<InvariantRecord> records;
  bool operator==(const Fingerprint&) const = default;
};

/// Evaluates tuples in parallel; the record order never depends on the
/// thread schedule. Throws BudgetExceeded past `max_tuples` records.
Fingerprint fingerprint(const GeneratorMatrix& s, std::size_t r_max,
                        std::uint64_t max_tuples = Budget{}.max_tuples);

struct Comparison {
  bool equal = false;
  /// Index into records of the first mismatch.
  std::optional<std::size_t> first_difference;
};

/// Throws DimensionError when n or r_max differ.
Comparison compare(const Fingerprint& a, const Fingerprint& b);

struct GlobalComparison {
  bool candidate = false;
  /// When a candidate: qubit i of `a` pairs with qubit permutation[i] of `b`.
  std::vector<std::size_t> permutation;
  /// Outcome with the identity pairing.
  Comparison local;
};

/// Tries all n! qubit relabellings of `b` against `a`. Requires n <= 8.
GlobalComparison compare_global(const GeneratorMatrix& a, const GeneratorMatrix& b, std::size_t r_max,
                                std::uint64_t max_tuples = Budget{}.max_tuples);

}  // namespace stabinv::invariants
