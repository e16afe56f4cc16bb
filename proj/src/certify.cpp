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

#include "stabinv/certify.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "stabinv/invariants.hpp"
#include "stabinv/io.hpp"
#include "stabinv/oracle.hpp"
#include "stabinv/stabilizer.hpp"
#include "stabinv/trees.hpp"

namespace stabinv::certify {

namespace {

using invariants::TreeTuple;
using stabilizer::AdjacencyMatrix;
using stabilizer::GeneratorMatrix;

Json bits_json(const gf2::BitVector& b) {
  std::string s;
  for (auto x : b) s.push_back(x ? '1' : '0');
  return s;
}

Json value_json(const oracle::DyadicValue& v) {
  return Json{{"re", v.value.re}, {"im", v.value.im}, {"scale", v.scale}};
}

void fail(SuiteReport& rep, Json example) {
  ++rep.failures;
  rep.status = Status::kFail;
  if (rep.counterexamples.size() < kMaxCounterexamples) rep.counterexamples.push_back(std::move(example));
}

std::vector<TreeTuple> all_tuples(std::size_t n, std::size_t r) {
  const auto trees = trees::enumerate_trees(r);
  const auto count = invariants::tuple_count(n, r);
  if (!count) throw BudgetExceeded("tuple count overflows");
  std::vector<TreeTuple> out;
  for (std::uint64_t i = 0; i < *count; ++i) out.push_back(invariants::tuple_at(trees, n, i));
  return out;
}

void check_tuple_budget(std::size_t n, std::size_t r, const SuiteLimits& limits) {
  const auto count = invariants::tuple_count(n, r);
  if (!count || *count > limits.budget.max_tuples) {
    throw BudgetExceeded("Catalan(" + std::to_string(r) + ")^" + std::to_string(n) + " tuples exceed max_tuples");
  }
}

// Seeded family: random_code and random_subcode alternate.
std::vector<GeneratorMatrix> code_family(std::size_t n, std::size_t k, const SuiteLimits& limits) {
  std::mt19937_64 rng(limits.seed ^ (0x9e3779b97f4a7c15ULL * (n * 64 + k + 1)));
  std::vector<GeneratorMatrix> out;
  for (std::size_t c = 0; c < limits.codes; ++c) {
    const std::uint64_t seed = rng();
    out.push_back(c % 2 == 0 ? stabilizer::random_code(n, k, seed) : stabilizer::random_subcode(n, k, seed));
  }
  return out;
}

void lemma1(SuiteReport& rep, const SuiteLimits& lim) {
  for (std::size_t n = 1; n <= lim.max_n; ++n) {
    oracle::check_operator_budget(n, lim.budget);
    for (std::uint64_t g = 0; g < AdjacencyMatrix::graph_count(n); ++g) {
      const auto theta = AdjacencyMatrix::from_index(n, g);
      ++rep.cases;
      const auto formula = oracle::rho_graph_formula(theta, lim.budget);
      const auto direct = oracle::rho_from_code(stabilizer::graph_generator(theta), lim.budget);
      if (!(formula == direct)) {
        fail(rep, Json{{"n", n}, {"graph_index", g}, {"code", io::code_to_json(stabilizer::graph_generator(theta))}});
      }
    }
  }
}

void lemma2(SuiteReport& rep, const SuiteLimits& lim) {
  for (std::size_t r = 1; r <= lim.max_r; ++r) {
    if (2 * r >= 63 || (std::uint64_t{1} << (2 * r)) > lim.budget.max_enumeration) {
      throw BudgetExceeded("lemma2: r = " + std::to_string(r) + " exceeds the enumeration budget");
    }
    for (const auto& tree : trees::enumerate_trees(r)) {
      const auto pi = trees::permutation_of(tree);
      for (std::uint64_t uv = 0; uv < (std::uint64_t{1} << (2 * r)); ++uv) {
        gf2::BitVector u(r), v(r);
        for (std::size_t c = 0; c < r; ++c) {
          u[c] = (uv >> c) & 1u;
          v[c] = (uv >> (r + c)) & 1u;
        }
        ++rep.cases;
        const auto direct = oracle::a_direct(pi, u, v);
        const auto closed = oracle::a_closed(tree, u, v);
        if (!(direct == closed)) {
          fail(rep, Json{{"tree", tree.serialize()},
                         {"u", bits_json(u)},
                         {"v", bits_json(v)},
                         {"direct", Json{direct.re, direct.im}},
                         {"closed", Json{closed.re, closed.im}}});
        }
      }
    }
  }
}

template <typename Check>
void over_graphs_and_tuples(const SuiteLimits& lim, Check&& check) {
  for (std::size_t n = 1; n <= lim.max_n; ++n) {
    for (std::size_t r = 2; r <= lim.max_r; ++r) {
      check_tuple_budget(n, r, lim);
      const auto tuples = all_tuples(n, r);
      for (std::uint64_t g = 0; g < AdjacencyMatrix::graph_count(n); ++g) {
        const auto theta = AdjacencyMatrix::from_index(n, g);
        for (const auto& t : tuples) check(n, g, theta, t);
      }
    }
  }
}

void lemma3(SuiteReport& rep, const SuiteLimits& lim) {
  over_graphs_and_tuples(lim, [&](std::size_t n, std::uint64_t g, const AdjacencyMatrix& theta, const TreeTuple& t) {
    ++rep.cases;
    const auto res = oracle::lemma3_check(theta, t, lim.budget);
    if (!res.pass) {
      fail(rep, Json{{"n", n},
                     {"graph_index", g},
                     {"tuple", t.id()},
                     {"trace", value_json(res.trace)},
                     {"signed_sum", res.sum.signed_sum},
                     {"space_size", res.sum.size},
                     {"reference_trace", value_json(res.reference_trace)},
                     {"reference_sum", res.reference_sum.signed_sum},
                     {"detail", res.detail}});
    }
  });
}

void lemma4(SuiteReport& rep, const SuiteLimits& lim) {
  over_graphs_and_tuples(lim, [&](std::size_t n, std::uint64_t g, const AdjacencyMatrix& theta, const TreeTuple& t) {
    ++rep.cases;
    const auto res = oracle::lemma4_check(theta, t, lim.budget);
    if (!res.pass) {
      Json cols = Json::array();
      for (auto c : *res.counterexample) cols.push_back(c);
      fail(rep, Json{{"n", n}, {"graph_index", g}, {"tuple", t.id()}, {"x_columns", cols}});
    }
  });
}

void theorem1(SuiteReport& rep, const SuiteLimits& lim) {
  for (std::size_t n = 1; n <= lim.max_n; ++n) {
    oracle::check_operator_budget(n, lim.budget);
    std::vector<GeneratorMatrix> codes;
    for (std::size_t k = 0; k <= n; ++k) {
      for (auto& s : code_family(n, k, lim)) codes.push_back(std::move(s));
    }
    std::vector<oracle::ExactOperator> rhos;
    for (const auto& s : codes) rhos.push_back(oracle::rho_from_code(s, lim.budget));
    for (std::size_t r = 2; r <= lim.max_r; ++r) {
      check_tuple_budget(n, r, lim);
      for (const auto& t : all_tuples(n, r)) {
        const auto perm = oracle::t_pi(t, lim.budget);
        std::optional<long long> constant;
        std::size_t witness = 0;
        for (std::size_t c = 0; c < codes.size(); ++c) {
          ++rep.cases;
          const std::vector<oracle::ExactOperator> copies(r, rhos[c]);
          const auto tr = oracle::trace_permuted_product(perm, copies);
          const std::size_t dim = invariants::invariant_dim(codes[c], t);
          const auto lg = tr.log2();
          if (!lg) {
            fail(rep, Json{{"tuple", t.id()},
                           {"code", io::code_to_json(codes[c])},
                           {"trace", value_json(tr)},
                           {"dim", dim},
                           {"detail", "trace is not a positive power of two"}});
            continue;
          }
          const long long offset = static_cast<long long>(*lg) - static_cast<long long>(dim);
          if (!constant) {
            constant = offset;
            witness = c;
          } else if (*constant != offset) {
            fail(rep, Json{{"tuple", t.id()},
                           {"code", io::code_to_json(codes[c])},
                           {"log2_trace", *lg},
                           {"dim", dim},
                           {"witness_code", io::code_to_json(codes[witness])},
                           {"witness_offset", *constant}});
          }
        }
      }
    }
  }
}

void theorem2(SuiteReport& rep, const SuiteLimits& lim) {
  for (std::size_t n = 1; n <= lim.max_n; ++n) {
    for (std::size_t r = 2; r <= lim.max_r; ++r) {
      check_tuple_budget(n, r, lim);
      const auto tuples = all_tuples(n, r);
      for (std::size_t k = 0; k <= n && r * k <= 16; ++k) {
        for (const auto& s : code_family(n, k, lim)) {
          for (const auto& t : tuples) {
            ++rep.cases;
            const std::size_t binary = invariants::invariant_dim(s, t);
            const std::size_t counted = invariants::theorem2_dim(s, t, lim.budget.max_enumeration);
            if (binary != counted) {
              fail(rep, Json{{"tuple", t.id()},
                             {"code", io::code_to_json(s)},
                             {"invariant_dim", binary},
                             {"theorem2_dim", counted}});
            }
          }
        }
      }
    }
  }
}

struct Suite {
  void (*run)(SuiteReport&, const SuiteLimits&);
  bool needs_n;
  bool needs_r;
};

const std::map<std::string, Suite, std::less<>>& suites() {
  static const std::map<std::string, Suite, std::less<>> table{
      {"lemma1", {&lemma1, true, false}},   {"lemma2", {&lemma2, false, true}},
      {"lemma3", {&lemma3, true, true}},    {"lemma4", {&lemma4, true, true}},
      {"theorem1", {&theorem1, true, true}}, {"theorem2", {&theorem2, true, true}},
  };
  return table;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kSkipped:
      return "skipped";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1", "lemma2", "lemma3", "lemma4", "theorem1", "theorem2"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteLimits& limits) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  SuiteReport rep;
  rep.name = std::string(name);
  const Suite& suite = it->second;
  const bool empty = (suite.needs_n && limits.max_n == 0) || (suite.needs_r && limits.max_r < 2 && name != "lemma2") ||
                     (name == "lemma2" && limits.max_r == 0) ||
                     ((name == "theorem1" || name == "theorem2") && limits.codes == 0);
  if (empty) {
    rep.status = Status::kSkipped;
    rep.warning = "limits leave nothing to check";
    return rep;
  }
  try {
    suite.run(rep, limits);
  } catch (const BudgetExceeded& e) {
    // A failure already found stands; only a clean partial run is skipped.
    if (rep.status != Status::kFail) rep.status = Status::kSkipped;
    rep.warning = std::string("budget exceeded: ") + e.what();
  }
  return rep;
}

Json to_json(const SuiteReport& report) {
  Json examples = Json::array();
  for (const auto& e : report.counterexamples) examples.push_back(e);
  Json out{{"name", report.name},
           {"status", std::string(status_name(report.status))},
           {"cases", report.cases},
           {"failures", report.failures},
           {"counterexamples", examples}};
  if (!report.warning.empty()) out["warning"] = report.warning;
  return out;
}

}  // namespace stabinv::certify
