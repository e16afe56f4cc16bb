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

// Acceptance gate: one PASS/FAIL line per criterion. Every comparison is
// exact integer or dyadic equality; there is no tolerance to tune.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "stabinv/certify.hpp"
#include "stabinv/invariants.hpp"
#include "stabinv/oracle.hpp"
#include "stabinv/stabilizer.hpp"
#include "stabinv/trees.hpp"

namespace {

using namespace stabinv;

constexpr std::uint64_t kSeed = 20261014;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome from_suite(const certify::SuiteReport& rep) {
  std::ostringstream os;
  os << rep.cases << " cases, " << rep.failures << " failures";
  if (!rep.warning.empty()) os << ", " << rep.warning;
  if (!rep.counterexamples.empty()) os << ", first: " << rep.counterexamples.front().dump();
  return {rep.status == certify::Status::kPass, os.str()};
}

certify::SuiteLimits limits(std::size_t max_n, std::size_t max_r, std::size_t codes = 20) {
  certify::SuiteLimits lim;
  lim.max_n = max_n;
  lim.max_r = max_r;
  lim.codes = codes;
  lim.seed = kSeed;
  return lim;
}

Outcome theorem1() {
  // n in {1,2,3}, r in {2,3}, 20 codes per (n, k) for k = 0..n.
  return from_suite(certify::run_suite("theorem1", limits(3, 3, 20)));
}

Outcome theorem2() { return from_suite(certify::run_suite("theorem2", limits(3, 3, 20))); }

Outcome degree2() {
  std::mt19937_64 rng(kSeed + 3);
  std::uint64_t cases = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int c = 0; c < 50; ++c) {
      const std::size_t k = rng() % (n + 1);
      const std::uint64_t seed = rng();
      const auto s = (c % 2 == 0) ? stabilizer::random_code(n, k, seed) : stabilizer::random_subcode(n, k, seed);
      for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
        stabilizer::QubitSet omega;
        for (std::size_t i = 0; i < n; ++i) {
          if ((mask >> i) & 1u) omega.push_back(i);
        }
        ++cases;
        if (invariants::degree2_dim(s, omega) != invariants::invariant_dim(s, invariants::omega_tuple(n, omega))) {
          return {false, "mismatch at n=" + std::to_string(n) + " seed " + std::to_string(seed)};
        }
      }
    }
  }
  return {true, std::to_string(cases) + " (code, omega) pairs"};
}

Outcome lemma2() {
  if (trees::enumerate_trees(5).size() != 42) return {false, "expected 42 trees at r=5"};
  return from_suite(certify::run_suite("lemma2", limits(0, 5)));
}

Outcome lemma1() { return from_suite(certify::run_suite("lemma1", limits(3, 0))); }

Outcome lemma4() { return from_suite(certify::run_suite("lemma4", limits(3, 3))); }

Outcome local_clifford() {
  std::mt19937_64 rng(kSeed + 7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const std::size_t k = rng() % (n + 1);
    const auto s = stabilizer::random_subcode(n, k, rng());
    const auto q = stabilizer::random_local_clifford(n, rng);
    const auto all = trees::enumerate_trees(2 + rng() % 3);
    std::vector<trees::BinaryTree> pick;
    for (std::size_t i = 0; i < n; ++i) pick.push_back(all[rng() % all.size()]);
    const invariants::TreeTuple t(pick);
    if (invariants::invariant_dim(s, t) != invariants::invariant_dim(stabilizer::apply_local_clifford(q, s), t)) {
      return {false, "binary dim changed at trial " + std::to_string(trial)};
    }
  }
  // Dense side, n <= 2: U rho U^dagger against the rewritten generators.
  std::uint64_t traces = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const auto s = stabilizer::random_subcode(n, rng() % (n + 1), rng());
    const auto q = stabilizer::random_local_clifford(n, rng);
    const auto rho = oracle::rho_from_code(s);
    const auto conj = oracle::conjugate_local(rho, q);
    const auto rewritten = stabilizer::apply_local_clifford(q, s);
    for (std::size_t r = 2; r <= 3; ++r) {
      const auto trees = trees::enumerate_trees(r);
      for (std::uint64_t i = 0; i < *invariants::tuple_count(n, r); ++i) {
        const auto t = invariants::tuple_at(trees, n, i);
        const auto before = oracle::invariant_trace(rho, t);
        ++traces;
        if (!(oracle::invariant_trace(conj, t) == before) || !(oracle::invariant_trace(rewritten, t) == before)) {
          return {false, "oracle trace changed for tuple " + t.id()};
        }
      }
    }
  }
  return {true, "100 binary triples, " + std::to_string(traces) + " dense traces"};
}

Outcome combinatorics() {
  const std::size_t catalan[] = {1, 2, 5, 14, 42, 132};
  for (std::size_t r = 1; r <= 6; ++r) {
    if (trees::enumerate_trees(r).size() != catalan[r - 1]) return {false, "wrong count at r=" + std::to_string(r)};
  }
  const auto two = trees::enumerate_trees(2);
  if (two.size() != 2 || two[0].left(0) != 1 || two[1].right(0) != 1) return {false, "r=2 trees"};
  const auto ten = trees::BinaryTree::parse("(L()R(L(L(R())R(R()))R(R())))");
  const std::string cycles = trees::cycle_notation(trees::permutation_of(ten));
  if (cycles != "(1 3 9 10)(2)(4 7 8)(5 6)") return {false, "ten-node tree gives " + cycles};
  return {true, "1 2 5 14 42 132; ten-node paths " + cycles};
}

Outcome nesting() {
  std::mt19937_64 rng(kSeed + 9);
  std::size_t reductions = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto s = stabilizer::random_subcode(n, rng() % (n + 1), rng());
    const auto all = trees::enumerate_trees(2 + rng() % 3);
    std::vector<trees::BinaryTree> pick;
    for (std::size_t i = 0; i < n; ++i) pick.push_back(all[rng() % all.size()]);
    const invariants::TreeTuple t(pick);
    const std::size_t dim = invariants::invariant_dim(s, t);
    const auto padded = invariants::pad_degree(t);
    if (invariants::invariant_dim(s, padded) != dim) return {false, "pad changed " + t.id()};
    const auto back = invariants::reduce_singleton(padded);
    if (!back || !(*back == t)) return {false, "reduce(pad) != identity for " + t.id()};
    if (const auto red = invariants::reduce_singleton(t)) {
      ++reductions;
      if (invariants::invariant_dim(s, *red) != dim) return {false, "reduce changed " + t.id()};
    }
  }
  return {true, "100 pairs, " + std::to_string(reductions) + " direct reductions"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Trace: log2 trace - dim constant per (n, tuple)", theorem1},
      {"2 Counting: tuple count equals kernel dimension", theorem2},
      {"3 Degree 2: support formula for every omega", degree2},
      {"4 Tau traces: closed form, all trees r <= 5", lemma2},
      {"5 Projector: graph projector formula, n <= 3", lemma1},
      {"6 Q map: Q vanishes on V_B(G)", lemma4},
      {"7 Local Clifford invariance", local_clifford},
      {"8 Tree counts and right-path decomposition", combinatorics},
      {"9 Degree padding and reduction", nesting},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%s] exact (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
