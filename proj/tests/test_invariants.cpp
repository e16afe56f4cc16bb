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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "stabinv/errors.hpp"

namespace stabinv::invariants {
namespace {

using stabilizer::AdjacencyMatrix;
using stabilizer::from_pauli_strings;
using stabilizer::graph_generator;
using trees::BinaryTree;

const BinaryTree kLeft = BinaryTree::identity_tree(2);
const BinaryTree kRight = BinaryTree::right_chain(2);

GeneratorMatrix five_qubit_code() { return from_pauli_strings({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}); }

TreeTuple random_tuple(std::size_t n, std::size_t r, std::mt19937_64& rng) {
  const auto all = trees::enumerate_trees(r);
  std::vector<BinaryTree> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(all[rng() % all.size()]);
  return TreeTuple(out);
}

GeneratorMatrix random_valid(std::mt19937_64& rng, std::size_t max_n) {
  const std::size_t n = 1 + rng() % max_n;
  const std::size_t k = rng() % (n + 1);
  const std::uint64_t seed = rng();
  return (seed & 1u) ? stabilizer::random_subcode(n, k, seed) : stabilizer::random_code(n, k, seed);
}

TEST(TreeTuple, ParseAndId) {
  const auto t = TreeTuple::parse("(L());(R())");
  EXPECT_EQ(t.qubits(), 2u);
  EXPECT_EQ(t.degree(), 2u);
  EXPECT_EQ(t.id(), "(L());(R())");
  EXPECT_THROW(TreeTuple::parse("(L());(R(L()))"), std::invalid_argument);
  EXPECT_THROW(TreeTuple(std::vector<BinaryTree>{}), std::invalid_argument);
  EXPECT_EQ(omega_tuple(3, {0, 2}).id(), "(R());(L());(R())");
}

TEST(InvariantDim, IdentityTuplesVanish) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_valid(rng, 5);
    for (std::size_t r = 1; r <= 4; ++r) {
      EXPECT_EQ(invariant_dim(s, TreeTuple::uniform(s.n(), BinaryTree::identity_tree(r))), 0u);
    }
  }
}

TEST(InvariantDim, AllRightSonsGiveK) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_valid(rng, 5);
    EXPECT_EQ(invariant_dim(s, TreeTuple::uniform(s.n(), kRight)), s.k());
  }
}

TEST(InvariantDim, OneEdgeGraph) {
  const auto s = graph_generator(AdjacencyMatrix::from_edges(2, {{0, 1}}));
  EXPECT_EQ(invariant_dim(s, TreeTuple({kRight, kLeft})), 0u);
  EXPECT_EQ(invariant_dim(s, TreeTuple({kLeft, kRight})), 0u);
  const auto plus = from_pauli_strings({"XI", "IX"});
  EXPECT_EQ(invariant_dim(plus, TreeTuple({kRight, kLeft})), 1u);
}

TEST(InvariantDim, MatrixShape) {
  const auto s = five_qubit_code();
  const auto t = TreeTuple::uniform(5, BinaryTree::parse("(L()R())"));
  const auto m = invariant_matrix(s, t);
  EXPECT_EQ(m.cols(), 3 * 4u);
  EXPECT_EQ(m.rows(), 2 * 5 * 2u);  // two paths per tree
  EXPECT_THROW(invariant_dim(s, TreeTuple::uniform(4, kLeft)), DimensionError);
}

TEST(InvariantDim, FiveQubitCodeDegreeTwo) {
  // Weight-4 stabilizers: each 4-subset supports three of them plus I.
  const auto s = five_qubit_code();
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    stabilizer::QubitSet omega;
    for (std::size_t i = 0; i < 5; ++i) {
      if ((mask >> i) & 1u) omega.push_back(i);
    }
    const std::size_t expected = omega.size() == 5 ? 4 : omega.size() == 4 ? 2 : 0;
    EXPECT_EQ(degree2_dim(s, omega), expected);
    EXPECT_EQ(invariant_dim(s, omega_tuple(5, omega)), expected);
  }
}

TEST(Degree2, MatchesTupleForm) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_valid(rng, 4);
    EXPECT_EQ(degree2_dim(s, {}), 0u);
    stabilizer::QubitSet all(s.n());
    std::iota(all.begin(), all.end(), std::size_t{0});
    EXPECT_EQ(degree2_dim(s, all), s.k());
    for (std::uint64_t mask = 0; mask < (1u << s.n()); ++mask) {
      stabilizer::QubitSet omega;
      for (std::size_t i = 0; i < s.n(); ++i) {
        if ((mask >> i) & 1u) omega.push_back(i);
      }
      EXPECT_EQ(degree2_dim(s, omega), invariant_dim(s, omega_tuple(s.n(), omega)));
    }
  }
}

TEST(Theorem2, MatchesKernelDimension) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = random_valid(rng, 4);
    const std::size_t r = 2 + rng() % 3;
    if (r * s.k() > 16) continue;
    const auto t = random_tuple(s.n(), r, rng);
    EXPECT_EQ(theorem2_dim(s, t), invariant_dim(s, t)) << t.id();
  }
  EXPECT_THROW(theorem2_dim(five_qubit_code(), TreeTuple::uniform(5, BinaryTree::right_chain(6)), 1u << 20),
               BudgetExceeded);
}

TEST(Invariance, LocalClifford) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_valid(rng, 5);
    const auto q = stabilizer::random_local_clifford(s.n(), rng);
    const auto t = random_tuple(s.n(), 2 + rng() % 3, rng);
    EXPECT_EQ(invariant_dim(stabilizer::apply_local_clifford(q, s), t), invariant_dim(s, t));
  }
}

TEST(Invariance, BasisChange) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = stabilizer::random_code(4, 3, rng());
    auto m = gf2::GF2Matrix::identity(3);
    m.set(0, 1, true);
    m.set(2, 0, true);
    const auto t = random_tuple(4, 3, rng);
    EXPECT_EQ(invariant_dim(stabilizer::change_basis(s, m), t), invariant_dim(s, t));
  }
}

TEST(Invariance, QubitPermutationMovesTrees) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = stabilizer::random_subcode(4, 1 + rng() % 4, rng());
    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto t = random_tuple(4, 3, rng);
    std::vector<BinaryTree> moved(4);
    for (std::size_t i = 0; i < 4; ++i) moved[perm[i]] = t[i];
    EXPECT_EQ(invariant_dim(stabilizer::permute_qubits(s, perm), t), invariant_dim(s, TreeTuple(moved)));
  }
}

TEST(Degree, PadAndReduce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_valid(rng, 4);
    const auto t = random_tuple(s.n(), 2 + rng() % 3, rng);
    const auto padded = pad_degree(t);
    EXPECT_EQ(padded.degree(), t.degree() + 1);
    EXPECT_EQ(invariant_dim(s, padded), invariant_dim(s, t));
    const auto back = reduce_singleton(padded);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, t);
    if (const auto red = reduce_singleton(t)) {
      EXPECT_EQ(invariant_dim(s, *red), invariant_dim(s, t));
    }
  }
}

TEST(Degree, ReduceExamples) {
  const auto b0 = TreeTuple::uniform(3, BinaryTree::identity_tree(4));
  EXPECT_EQ(*reduce_singleton(b0), TreeTuple::uniform(3, BinaryTree::identity_tree(3)));
  EXPECT_EQ(pad_degree(b0), TreeTuple::uniform(3, BinaryTree::identity_tree(5)));
  EXPECT_FALSE(reduce_singleton(TreeTuple::uniform(2, BinaryTree::right_chain(3))).has_value());
  // Node 2 is singleton in the first tree only; node 3 in neither.
  EXPECT_FALSE(reduce_singleton(TreeTuple({BinaryTree::parse("(L(R()))"), BinaryTree::right_chain(3)})).has_value());
  EXPECT_FALSE(reduce_singleton(TreeTuple::uniform(2, BinaryTree::identity_tree(1))).has_value());
}

TEST(Fingerprint, CountsAndOrder) {
  EXPECT_EQ(fingerprint(from_pauli_strings({"X"}), 2).records.size(), 2u);
  const auto fp = fingerprint(stabilizer::random_code(2, 2, 9), 3);
  EXPECT_EQ(fp.records.size(), 29u);
  EXPECT_EQ(tuple_count(2, 3), 25u);
  EXPECT_FALSE(tuple_count(64, 10).has_value());
  for (std::size_t i = 1; i < fp.records.size(); ++i) {
    const auto& a = fp.records[i - 1];
    const auto& b = fp.records[i];
    EXPECT_TRUE(a.r < b.r || (a.r == b.r && a.tuple < b.tuple));
  }
  for (const auto& rec : fp.records) {
    EXPECT_EQ(rec.dim, invariant_dim(stabilizer::random_code(2, 2, 9), TreeTuple::parse(rec.tuple)));
  }
  EXPECT_THROW(fingerprint(five_qubit_code(), 4, 1000), BudgetExceeded);
  EXPECT_THROW(fingerprint(five_qubit_code(), 1), std::invalid_argument);
}

TEST(Fingerprint, TupleAtMatchesEnumerationOrder) {
  const auto trees3 = trees::enumerate_trees(3);
  EXPECT_EQ(tuple_at(trees3, 2, 0).id(), trees3[0].serialize() + ";" + trees3[0].serialize());
  EXPECT_EQ(tuple_at(trees3, 2, 1).id(), trees3[0].serialize() + ";" + trees3[1].serialize());
  EXPECT_EQ(tuple_at(trees3, 2, 5).id(), trees3[1].serialize() + ";" + trees3[0].serialize());
}

TEST(Compare, SelfAndLocalCliffordImage) {
  std::mt19937_64 rng(10);
  const auto s = stabilizer::random_subcode(3, 2, 10);
  const auto fs = fingerprint(s, 3);
  EXPECT_TRUE(compare(fs, fs).equal);
  const auto lc = stabilizer::apply_local_clifford(stabilizer::random_local_clifford(3, rng), s);
  EXPECT_TRUE(compare(fs, fingerprint(lc, 3)).equal);
  EXPECT_THROW(compare(fs, fingerprint(stabilizer::restrict_to(s, {0, 1}), 3)), DimensionError);
  EXPECT_THROW(compare(fs, fingerprint(s, 2)), DimensionError);
}

TEST(Compare, ProductVersusEdge) {
  const auto plus = from_pauli_strings({"XI", "IX"});
  const auto edge = graph_generator(AdjacencyMatrix::from_edges(2, {{0, 1}}));
  const auto c = compare(fingerprint(plus, 2), fingerprint(edge, 2));
  EXPECT_FALSE(c.equal);
  ASSERT_TRUE(c.first_difference.has_value());
  EXPECT_EQ(fingerprint(plus, 2).records[*c.first_difference].tuple, "(L());(R())");
}

TEST(Compare, PathAndTriangleAreLocallyEquivalent) {
  std::mt19937_64 rng(11);
  const auto path = graph_generator(AdjacencyMatrix::from_edges(3, {{0, 1}, {1, 2}}));
  const auto triangle = graph_generator(AdjacencyMatrix::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
  const auto a = stabilizer::apply_local_clifford(stabilizer::random_local_clifford(3, rng), path);
  const auto b = stabilizer::apply_local_clifford(stabilizer::random_local_clifford(3, rng), triangle);
  EXPECT_TRUE(compare(fingerprint(a, 2), fingerprint(b, 2)).equal);
  EXPECT_TRUE(compare(fingerprint(a, 3), fingerprint(b, 3)).equal);
}

TEST(Compare, GlobalFindsPermutation) {
  std::mt19937_64 rng(12);
  // Star centred on qubit 0 against an LC image of a star centred on qubit 2.
  const auto a = graph_generator(AdjacencyMatrix::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
  const auto star = stabilizer::apply_local_clifford(
      stabilizer::random_local_clifford(4, rng),
      graph_generator(AdjacencyMatrix::from_edges(4, {{2, 0}, {2, 1}, {2, 3}})));
  const auto g2 = compare_global(a, star, 2);
  EXPECT_TRUE(g2.candidate);
  ASSERT_EQ(g2.permutation.size(), 4u);
  EXPECT_TRUE(compare(fingerprint(a, 3), fingerprint(stabilizer::permute_qubits(star, g2.permutation), 3)).equal);

  const auto line = graph_generator(AdjacencyMatrix::from_edges(3, {{0, 1}}));
  const auto moved = graph_generator(AdjacencyMatrix::from_edges(3, {{1, 2}}));
  EXPECT_FALSE(compare(fingerprint(line, 2), fingerprint(moved, 2)).equal);
  const auto gm = compare_global(line, moved, 3);
  EXPECT_TRUE(gm.candidate);
  EXPECT_FALSE(gm.local.equal);
  EXPECT_THROW(compare_global(line, a, 2), DimensionError);
}

TEST(Compare, GlobalDistinguishesEntanglementClasses) {
  const auto line = graph_generator(AdjacencyMatrix::from_edges(3, {{0, 1}}));
  const auto ghz = graph_generator(AdjacencyMatrix::from_edges(3, {{0, 1}, {1, 2}}));
  EXPECT_FALSE(compare_global(line, ghz, 2).candidate);
}

TEST(Fingerprint, ParallelMatchesSerialCalls) {
  const auto s = five_qubit_code();
  const auto fp = fingerprint(s, 3);
  EXPECT_EQ(fp.records.size(), 32u + 3125u);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto& rec = fp.records[rng() % fp.records.size()];
    EXPECT_EQ(rec.dim, invariant_dim(s, TreeTuple::parse(rec.tuple)));
  }
}

}  // namespace
}  // namespace stabinv::invariants
