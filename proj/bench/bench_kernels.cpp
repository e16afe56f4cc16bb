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

// Parallel kernels against the serial reference implementation.

#include <benchmark/benchmark.h>

#include <random>

#include "stabinv/invariants.hpp"
#include "stabinv/oracle.hpp"
#include "stabinv/reference.hpp"
#include "stabinv/stabilizer.hpp"

namespace {

using namespace stabinv;

gf2::GF2Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  gf2::GF2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1u);
  }
  return m;
}

void BM_RankPacked(benchmark::State& state) {
  const auto m = random_matrix(state.range(0), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(gf2::rank(m));
}
void BM_RankReference(benchmark::State& state) {
  const auto m = random_matrix(state.range(0), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(reference::rank(m));
}
BENCHMARK(BM_RankPacked)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_RankReference)->Arg(64)->Arg(256)->Arg(1024);

void BM_FingerprintParallel(benchmark::State& state) {
  const auto s = stabilizer::random_code(state.range(0), state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(invariants::fingerprint(s, 4));
}
void BM_FingerprintReference(benchmark::State& state) {
  const auto s = stabilizer::random_code(state.range(0), state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(reference::fingerprint(s, 4));
}
BENCHMARK(BM_FingerprintParallel)->Arg(2)->Arg(3);
BENCHMARK(BM_FingerprintReference)->Arg(2)->Arg(3);

void trace_setup(std::size_t n, std::size_t r, oracle::IndexPermutation& perm,
                 std::vector<oracle::ExactOperator>& copies) {
  const auto s = stabilizer::random_code(n, n, 5);
  const auto tree = trees::enumerate_trees(r).back();
  perm = oracle::t_pi(invariants::TreeTuple::uniform(n, tree));
  copies.assign(r, oracle::rho_from_code(s));
}

void BM_TraceParallel(benchmark::State& state) {
  oracle::IndexPermutation perm;
  std::vector<oracle::ExactOperator> copies;
  trace_setup(state.range(0), state.range(1), perm, copies);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::trace_permuted_product(perm, copies));
}
void BM_TraceReference(benchmark::State& state) {
  oracle::IndexPermutation perm;
  std::vector<oracle::ExactOperator> copies;
  trace_setup(state.range(0), state.range(1), perm, copies);
  for (auto _ : state) benchmark::DoNotOptimize(reference::trace_permuted_product(perm, copies));
}
BENCHMARK(BM_TraceParallel)->Args({3, 3})->Args({4, 3})->Args({3, 4});
BENCHMARK(BM_TraceReference)->Args({3, 3})->Args({4, 3})->Args({3, 4});

}  // namespace

BENCHMARK_MAIN();
