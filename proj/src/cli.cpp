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

#include "stabinv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stabinv/certify.hpp"
#include "stabinv/errors.hpp"
#include "stabinv/invariants.hpp"
#include "stabinv/io.hpp"
#include "stabinv/stabilizer.hpp"

namespace stabinv::cli {

namespace {

using io::Json;

struct Options {
  std::vector<std::string> codes;
  std::string format = "bits";
  bool format_given = false;
  std::string trees;
  std::string omega;
  std::size_t r_max = 3;
  bool global = false;
  std::uint64_t seed = 1;
  std::uint64_t max_dim = Budget{}.max_oracle_dim;
  std::uint64_t max_tuples = Budget{}.max_tuples;
  std::uint64_t max_enum = Budget{}.max_enumeration;
  std::string out_path;
  bool table = false;
  std::vector<std::string> suites;
  std::size_t max_n = 2;
  std::size_t max_r = 3;
  std::size_t per_k = 20;
};

// Thrown for bad input that CLI11 cannot see (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Budget make_budget(const Options& o) {
  Budget b;
  b.max_oracle_dim = o.max_dim;
  b.max_tuples = o.max_tuples;
  b.max_enumeration = o.max_enum;
  if (const char* mb = std::getenv("STABINV_BUDGET_MB"); mb != nullptr && *mb != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(mb, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError(std::string("STABINV_BUDGET_MB must be a positive integer, got '") + mb + "'");
    b.memory_mb = v;
  }
  return b;
}

io::CodeFormat code_format(const Options& o) {
  if (!o.format_given) return io::CodeFormat::kAuto;
  return o.format == "pauli" ? io::CodeFormat::kPauli : io::CodeFormat::kBits;
}

stabilizer::GeneratorMatrix load(const std::string& path, const Options& o) {
  return io::read_code_file(path, code_format(o));
}

// Loads and validates; a violation is reported and turned into exit 1.
std::optional<stabilizer::GeneratorMatrix> load_valid(const std::string& path, const Options& o, std::ostream& err) {
  auto s = load(path, o);
  const auto rep = stabilizer::validate(s);
  if (!rep.ok()) {
    err << "stabinv: " << path << ": " << stabilizer::violation_name(rep.violation) << ": " << rep.detail << '\n';
    return std::nullopt;
  }
  return s;
}

void emit(const Json& j, const std::string& table, const Options& o, std::ostream& out) {
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.out_path);
    f << j.dump(2) << '\n';
    return;
  }
  if (o.table) {
    out << table;
  } else {
    out << j.dump(2) << '\n';
  }
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto s = load(o.codes.front(), o);
  const auto rep = stabilizer::validate(s);
  Json j{{"n", s.n()}, {"k", s.k()}, {"status", std::string(stabilizer::violation_name(rep.violation))}};
  if (!rep.ok()) j["detail"] = rep.detail;
  std::ostringstream t;
  t << "n " << s.n() << "  k " << s.k() << "  " << stabilizer::violation_name(rep.violation);
  if (!rep.ok()) t << "  (" << rep.detail << ")";
  t << '\n';
  emit(j, t.str(), o, out);
  return rep.ok() ? kExitOk : kExitViolation;
}

int cmd_invariant(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = load_valid(o.codes.front(), o, err);
  if (!s) return kExitViolation;
  std::optional<invariants::TreeTuple> tuple;
  if (!o.omega.empty()) {
    if (!o.trees.empty()) throw UsageError("give either --trees or --omega, not both");
    tuple = invariants::omega_tuple(s->n(), io::parse_omega(o.omega, s->n()));
  } else if (!o.trees.empty()) {
    const auto spec = io::parse_tree_spec(o.trees, s->n());
    if (spec.all_degree) throw UsageError("invariant evaluates a single tuple; use fingerprint for all:r");
    tuple = spec.tuple;
  } else {
    throw UsageError("invariant needs --trees or --omega");
  }
  if (tuple->degree() > Budget{}.max_degree) {
    throw BudgetExceeded("degree " + std::to_string(tuple->degree()) + " exceeds the limit " +
                         std::to_string(Budget{}.max_degree));
  }
  const invariants::InvariantRecord rec{tuple->degree(), tuple->id(), invariants::invariant_dim(*s, *tuple)};
  std::ostringstream t;
  t << "r " << rec.r << "  dim " << rec.dim << "  " << rec.tuple << '\n';
  emit(io::to_json(rec), t.str(), o, out);
  return kExitOk;
}

std::string fingerprint_table(const invariants::Fingerprint& fp) {
  std::ostringstream t;
  t << "n " << fp.n << "  r_max " << fp.r_max << "  records " << fp.records.size() << '\n';
  for (const auto& rec : fp.records) t << std::setw(3) << rec.r << std::setw(5) << rec.dim << "  " << rec.tuple << '\n';
  return t.str();
}

int cmd_fingerprint(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.r_max < 2) throw UsageError("--rmax must be at least 2");
  const auto s = load_valid(o.codes.front(), o, err);
  if (!s) return kExitViolation;
  const Budget b = make_budget(o);
  const auto fp = invariants::fingerprint(*s, o.r_max, b.max_tuples);
  emit(io::to_json(fp), fingerprint_table(fp), o, out);
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.r_max < 2) throw UsageError("--rmax must be at least 2");
  if (o.codes.size() != 2) throw UsageError("compare needs --code twice");
  const auto a = load_valid(o.codes[0], o, err);
  const auto b = load_valid(o.codes[1], o, err);
  if (!a || !b) return kExitViolation;
  if (a->n() != b->n()) {
    throw DimensionError("codes act on " + std::to_string(a->n()) + " and " + std::to_string(b->n()) + " qubits");
  }
  const Budget budget = make_budget(o);
  Json j{{"n", a->n()}, {"r_max", o.r_max}};
  std::ostringstream t;
  const auto fa = invariants::fingerprint(*a, o.r_max, budget.max_tuples);
  const auto fb = invariants::fingerprint(*b, o.r_max, budget.max_tuples);
  const auto local = invariants::compare(fa, fb);
  bool same = local.equal;
  const std::optional<std::size_t> diff = local.first_difference;
  if (o.global) {
    const auto g = invariants::compare_global(*a, *b, o.r_max, budget.max_tuples);
    same = g.candidate;
    if (same) {
      Json perm = Json::array();
      for (std::size_t p : g.permutation) perm.push_back(p + 1);
      j["permutation"] = perm;
    }
  }
  const std::string verdict = same ? "indistinguishable at r <= " + std::to_string(o.r_max) : "distinguished";
  j["verdict"] = verdict;
  t << verdict << '\n';
  if (!same && diff) {
    // Dims at the first difference under the identity pairing.
    const auto& ra = fa.records[*diff];
    const auto& rb = fb.records[*diff];
    j["first_difference"] = Json{{"r", ra.r}, {"tuple", ra.tuple}, {"dim_a", ra.dim}, {"dim_b", rb.dim}};
    t << "first difference: r " << ra.r << "  " << ra.tuple << "  dims " << ra.dim << " vs " << rb.dim << '\n';
  }
  emit(j, t.str(), o, out);
  return same ? kExitOk : kExitViolation;
}

int cmd_oracle_check(const Options& o, std::ostream& out, std::ostream& err) {
  certify::SuiteLimits lim;
  lim.max_n = o.max_n;
  lim.max_r = o.max_r;
  lim.codes = o.per_k;
  lim.seed = o.seed;
  lim.budget = make_budget(o);
  std::vector<std::string> names = o.suites;
  if (names.empty() || (names.size() == 1 && names.front() == "all")) names = certify::suite_names();
  Json list = Json::array();
  std::ostringstream t;
  bool failed = false;
  for (const auto& name : names) {
    const auto rep = certify::run_suite(name, lim);
    if (rep.status == certify::Status::kFail) failed = true;
    if (!rep.warning.empty()) err << "stabinv: warning: suite " << name << ": " << rep.warning << '\n';
    list.push_back(certify::to_json(rep));
    t << std::left << std::setw(10) << name << std::setw(9) << certify::status_name(rep.status) << rep.cases
      << " cases, " << rep.failures << " failures\n";
  }
  Json j{{"max_n", o.max_n}, {"max_r", o.max_r}, {"codes", o.per_k}, {"seed", o.seed},
         {"status", failed ? "fail" : "pass"}, {"suites", list}};
  emit(j, t.str(), o, out);
  return failed ? kExitViolation : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Local-unitary invariants of stabilizer codes over GF(2)", "stabinv"};
  app.require_subcommand(1);

  auto code_opts = [&o](CLI::App* sub, bool two) {
    auto* opt = sub->add_option("--code", o.codes, two ? "Code files A and B" : "Code file")->required();
    opt->expected(two ? 2 : 1);
    sub->add_option_function<std::string>(
           "--format",
           [&o](const std::string& f) {
             o.format = f;
             o.format_given = true;
           },
           "Input format (default: detect)")
        ->check(CLI::IsMember({"bits", "pauli"}));
  };
  auto output_opts = [&o](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "Write JSON to this file");
    sub->add_flag("--table", o.table, "Human-readable table instead of JSON");
  };
  auto budget_opts = [&o](CLI::App* sub) {
    sub->add_option("--max-tuples", o.max_tuples, "Tuple budget")->check(CLI::PositiveNumber);
    sub->add_option("--max-dim", o.max_dim, "Largest dense oracle dimension")->check(CLI::PositiveNumber);
    sub->add_option("--max-enum", o.max_enum, "Largest exhaustive enumeration")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check shape, rank and self-orthogonality");
  code_opts(validate, false);
  output_opts(validate);

  auto* invariant = app.add_subcommand("invariant", "One kernel dimension for one tree tuple");
  code_opts(invariant, false);
  invariant->add_option("--trees", o.trees, "Tuple: 't1;t2;...', a single tree, or @file");
  invariant->add_option("--omega", o.omega, "Degree-2 sugar: 1-based qubits, e.g. 1,3");
  output_opts(invariant);

  auto* fp = app.add_subcommand("fingerprint", "All kernel dimensions for r = 2..rmax");
  code_opts(fp, false);
  fp->add_option("--rmax", o.r_max, "Largest degree")->capture_default_str();
  budget_opts(fp);
  output_opts(fp);

  auto* cmp = app.add_subcommand("compare", "Screen two codes for local equivalence");
  code_opts(cmp, true);
  cmp->add_option("--rmax", o.r_max, "Largest degree")->capture_default_str();
  cmp->add_flag("--global", o.global, "Also try every qubit permutation");
  budget_opts(cmp);
  output_opts(cmp);

  auto* oc = app.add_subcommand("oracle-check", "Certify the binary engine against the dense oracle");
  oc->add_option("--suite", o.suites, "lemma1..lemma4, theorem1, theorem2 or all (repeatable)")
      ->check(CLI::IsMember({"all", "lemma1", "lemma2", "lemma3", "lemma4", "theorem1", "theorem2"}));
  oc->add_option("--max-n", o.max_n, "Largest qubit count")->capture_default_str();
  oc->add_option("--max-r", o.max_r, "Largest degree")->capture_default_str();
  oc->add_option("--codes", o.per_k, "Random codes per (n, k)")->capture_default_str();
  oc->add_option("--seed", o.seed, "Seed for the random code families")->capture_default_str();
  budget_opts(oc);
  output_opts(oc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (invariant->parsed()) return cmd_invariant(o, out, err);
    if (fp->parsed()) return cmd_fingerprint(o, out, err);
    if (cmp->parsed()) return cmd_compare(o, out, err);
    return cmd_oracle_check(o, out, err);
  } catch (const ParseError& e) {
    err << "stabinv: parse error";
    if (e.line() > 0) err << " at line " << e.line();
    err << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "stabinv: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const UsageError& e) {
    err << "stabinv: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "stabinv: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace stabinv::cli
