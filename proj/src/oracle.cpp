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

#include "stabinv/oracle.hpp"

#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stabinv::oracle {

namespace {

constexpr GaussInt kOne{1, 0};
constexpr GaussInt kI{0, 1};
constexpr GaussInt kZero{0, 0};

GaussInt shifted(GaussInt g, int bits) {
  const std::int64_t f = std::int64_t{1} << bits;
  return {g.re * f, g.im * f};
}

Matrix2 mul2(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Matrix2 adj2(const Matrix2& a) { return {a[0].conj(), a[2].conj(), a[1].conj(), a[3].conj()}; }

ExactOperator tensor_of(const BitVector& u, const BitVector& v, Matrix2 (*factor)(int, int), const Budget& budget) {
  if (u.size() != v.size()) throw DimensionError("pauli_op: u and v differ in length");
  check_operator_budget(u.size(), budget);
  ExactOperator out = ExactOperator::identity(0);
  for (std::size_t i = 0; i < u.size(); ++i) out = kron(out, ExactOperator::from_matrix2(factor(u[i] & 1, v[i] & 1)));
  return out;
}

std::uint64_t column_mask(const gf2::GF2Matrix& m, std::size_t row) {
  std::uint64_t mask = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.get(row, c)) mask |= std::uint64_t{1} << c;
  }
  return mask;
}

int parity(std::uint64_t x) { return std::popcount(x) & 1; }

// Precomputed masks for evaluating V_B(G) membership and Q(X).
struct VSpaceContext {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<std::uint64_t> theta_rows;                   // qubit mask of row i
  std::vector<std::vector<std::uint64_t>> path_copies;     // per qubit: copy masks of its paths
  std::vector<std::vector<std::uint64_t>> d_columns;       // per qubit: copy mask of column j of D_{B_i}

  VSpaceContext(const AdjacencyMatrix& theta, const TreeTuple& t) : n(theta.n()), r(t.degree()) {
    if (t.qubits() != n) throw DimensionError("V_B(G): tuple and graph disagree on qubit count");
    if (n > 63 || r > 63) throw BudgetExceeded("V_B(G): masks limited to 63 qubits and copies");
    for (std::size_t i = 0; i < n; ++i) {
      theta_rows.push_back(column_mask(theta.matrix(), i));
      std::vector<std::uint64_t> paths;
      for (const auto& p : trees::maximal_right_paths(t[i]).paths) {
        std::uint64_t m = 0;
        for (std::size_t node : p) m |= std::uint64_t{1} << node;
        paths.push_back(m);
      }
      path_copies.push_back(std::move(paths));
      const gf2::GF2Matrix d = trees::d_matrix(t[i]).transpose();
      std::vector<std::uint64_t> cols;
      for (std::size_t j = 0; j < r; ++j) cols.push_back(column_mask(d, j));
      d_columns.push_back(std::move(cols));
    }
  }

  bool contains(std::span<const std::uint64_t> x) const {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint64_t copies : path_copies[i]) {
        std::uint64_t s = 0;
        for (std::uint64_t m = copies; m != 0; m &= m - 1) s ^= x[static_cast<std::size_t>(std::countr_zero(m))];
        if (parity(theta_rows[i] & s) || ((s >> i) & 1u)) return false;
      }
    }
    return true;
  }

  int q(std::span<const std::uint64_t> x) const {
    int acc = 0;
    // Tr X^T L X: strictly lower triangle of theta.
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!((x[j] >> a) & 1u)) continue;
        const std::uint64_t below = a == 0 ? 0 : (std::uint64_t{1} << a) - 1;
        acc ^= parity(theta_rows[a] & below & x[j]);
      }
    }
    // Tr X_B^T theta X.
    std::vector<std::uint64_t> rows(n, 0);  // copy mask of row i of X
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((x[j] >> i) & 1u) rows[i] |= std::uint64_t{1} << j;
      }
    }
    for (std::size_t j = 0; j < r; ++j) {
      std::uint64_t z = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (parity(rows[i] & d_columns[i][j])) z |= std::uint64_t{1} << i;
      }
      for (std::size_t a = 0; a < n; ++a) {
        if ((z >> a) & 1u) acc ^= parity(theta_rows[a] & x[j]);
      }
    }
    return acc & 1;
  }
};

template <typename Visit>
void for_each_matrix(const VSpaceContext& ctx, const Budget& budget, Visit&& visit) {
  const std::size_t bits = ctx.n * ctx.r;
  if (bits >= 63 || (std::uint64_t{1} << bits) > budget.max_enumeration) {
    throw BudgetExceeded("V_B(G): 2^(n*r) = 2^" + std::to_string(bits) + " matrices exceeds the enumeration budget");
  }
  const std::uint64_t nmask = ctx.n == 0 ? 0 : (~std::uint64_t{0} >> (64 - ctx.n));
  std::vector<std::uint64_t> cols(ctx.r);
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << bits); ++e) {
    for (std::size_t j = 0; j < ctx.r; ++j) cols[j] = (e >> (j * ctx.n)) & nmask;
    if (ctx.contains(cols)) {
      if (!visit(std::span<const std::uint64_t>(cols))) return;
    }
  }
}

DyadicValue trace_kernel(const IndexPermutation& p, const std::vector<const ExactOperator*>& copies) {
  const std::size_t n = p.qubits;
  const std::size_t r = p.copies;
  if (copies.size() != r) throw DimensionError("trace_permuted_product: need one operator per copy");
  int scale = 0;
  for (const auto* op : copies) {
    if (op->qubits() != n) throw DimensionError("trace_permuted_product: operator qubit count differs");
    scale += op->scale();
  }
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  const std::int64_t total = static_cast<std::int64_t>(p.image.size());
  std::int64_t re = 0;
  std::int64_t im = 0;
#pragma omp parallel for schedule(static) reduction(+ : re, im)
  for (std::int64_t j = 0; j < total; ++j) {
    const std::uint64_t row = static_cast<std::uint64_t>(j);
    const std::uint64_t col = p.image[static_cast<std::size_t>(j)];
    GaussInt prod = kOne;
    for (std::size_t c = 0; c < r && !prod.is_zero(); ++c) {
      const std::size_t shift = (r - 1 - c) * n;
      prod = prod * copies[c]->at((row >> shift) & mask, (col >> shift) & mask);
    }
    re += prod.re;
    im += prod.im;
  }
  return {{re, im}, scale};
}

}  // namespace

std::optional<int> DyadicValue::log2() const {
  if (value.im != 0 || value.re <= 0) return std::nullopt;
  if (!std::has_single_bit(static_cast<std::uint64_t>(value.re))) return std::nullopt;
  return std::countr_zero(static_cast<std::uint64_t>(value.re)) - scale;
}

bool operator==(const DyadicValue& a, const DyadicValue& b) {
  if (a.scale >= b.scale) return a.value == shifted(b.value, a.scale - b.scale);
  return shifted(a.value, b.scale - a.scale) == b.value;
}

std::string DyadicValue::to_string() const {
  std::ostringstream os;
  os << value.re;
  if (value.im != 0) os << (value.im < 0 ? "-" : "+") << (value.im < 0 ? -value.im : value.im) << "i";
  if (scale != 0) os << " / 2^" << scale;
  return os.str();
}

Matrix2 sigma_matrix(int u, int v) {
  switch ((u & 1) * 2 + (v & 1)) {
    case 0:
      return {kOne, kZero, kZero, kOne};
    case 1:
      return {kZero, kOne, kOne, kZero};
    case 2:
      return {kOne, kZero, kZero, -kOne};
    default:
      return {kZero, -kI, kI, kZero};
  }
}

Matrix2 tau_matrix(int u, int v) {
  if ((u & 1) && (v & 1)) return {kZero, kOne, -kOne, kZero};
  return sigma_matrix(u, v);
}

Matrix2 tau_entry_matrix(int a, int b) {
  Matrix2 m{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      if (((x + y) & 1) != (b & 1)) continue;
      const int sign = ((a & 1) && ((b + x) & 1)) ? -1 : 1;
      m[static_cast<std::size_t>(2 * x + y)] = {sign, 0};
    }
  }
  return m;
}

ExactOperator::ExactOperator(std::size_t qubits, int scale)
    : qubits_(qubits), scale_(scale), entries_((std::size_t{1} << qubits) * (std::size_t{1} << qubits)) {}

ExactOperator ExactOperator::identity(std::size_t qubits) {
  ExactOperator out(qubits);
  for (std::size_t i = 0; i < out.dim(); ++i) out.at(i, i) = kOne;
  return out;
}

ExactOperator ExactOperator::from_matrix2(const Matrix2& m) {
  ExactOperator out(1);
  for (std::size_t i = 0; i < 4; ++i) out.at(i / 2, i % 2) = m[i];
  return out;
}

bool operator==(const ExactOperator& a, const ExactOperator& b) {
  if (a.qubits() != b.qubits()) return false;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (!(a.value(r, c) == b.value(r, c))) return false;
    }
  }
  return true;
}

ExactOperator multiply(const ExactOperator& a, const ExactOperator& b) {
  if (a.qubits() != b.qubits()) throw DimensionError("multiply: operators act on different qubit counts");
  const std::size_t d = a.dim();
  ExactOperator out(a.qubits(), a.scale() + b.scale());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t l = 0; l < d; ++l) {
      const GaussInt x = a.at(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) out.at(i, j) += x * b.at(l, j);
    }
  }
  return out;
}

ExactOperator add(const ExactOperator& a, const ExactOperator& b) {
  if (a.qubits() != b.qubits()) throw DimensionError("add: operators act on different qubit counts");
  const int scale = std::max(a.scale(), b.scale());
  ExactOperator out(a.qubits(), scale);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      out.at(r, c) = shifted(a.at(r, c), scale - a.scale()) + shifted(b.at(r, c), scale - b.scale());
    }
  }
  return out;
}

ExactOperator kron(const ExactOperator& a, const ExactOperator& b) {
  ExactOperator out(a.qubits() + b.qubits(), a.scale() + b.scale());
  const std::size_t db = b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const GaussInt x = a.at(i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < db; ++p) {
        for (std::size_t q = 0; q < db; ++q) out.at(i * db + p, j * db + q) = x * b.at(p, q);
      }
    }
  }
  return out;
}

ExactOperator adjoint(const ExactOperator& a) {
  ExactOperator out(a.qubits(), a.scale());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out.at(c, r) = a.at(r, c).conj();
  }
  return out;
}

ExactOperator negate(const ExactOperator& a) {
  ExactOperator out(a.qubits(), a.scale());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out.at(r, c) = -a.at(r, c);
  }
  return out;
}

DyadicValue trace(const ExactOperator& a) {
  GaussInt t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a.at(i, i);
  return {t, a.scale()};
}

void check_operator_budget(std::size_t qubits, const Budget& budget) {
  if (qubits >= 31 || (std::uint64_t{1} << qubits) > budget.max_oracle_dim) {
    throw BudgetExceeded("oracle: operator on " + std::to_string(qubits) + " qubits exceeds dimension budget " +
                         std::to_string(budget.max_oracle_dim));
  }
  const std::uint64_t d = std::uint64_t{1} << qubits;
  if (d * d * sizeof(GaussInt) > budget.memory_mb * (std::uint64_t{1} << 20)) {
    throw BudgetExceeded("oracle: dense operator on " + std::to_string(qubits) + " qubits exceeds " +
                         std::to_string(budget.memory_mb) + " MiB");
  }
}

ExactOperator pauli_op(const BitVector& u, const BitVector& v, const Budget& budget) {
  return tensor_of(u, v, &sigma_matrix, budget);
}

ExactOperator tau_op(const BitVector& u, const BitVector& v, const Budget& budget) {
  return tensor_of(u, v, &tau_matrix, budget);
}

ExactOperator pauli_op(const BitVector& uv, const Budget& budget) {
  if (uv.size() % 2 != 0) throw DimensionError("pauli_op: vector length must be even");
  const std::size_t n = uv.size() / 2;
  return pauli_op(BitVector(uv.begin(), uv.begin() + static_cast<std::ptrdiff_t>(n)),
                  BitVector(uv.begin() + static_cast<std::ptrdiff_t>(n), uv.end()), budget);
}

ExactOperator rho_from_code(const GeneratorMatrix& s, const Budget& budget) {
  return rho_from_code(s, std::vector<bool>(s.k(), false), budget);
}

ExactOperator rho_from_code(const GeneratorMatrix& s, const std::vector<bool>& negated, const Budget& budget) {
  const auto report = stabilizer::validate(s);
  if (!report.ok()) throw std::invalid_argument("rho_from_code: invalid code (" + report.detail + ")");
  if (negated.size() != s.k()) throw DimensionError("rho_from_code: one sign per generator");
  check_operator_budget(s.n(), budget);
  std::vector<ExactOperator> gens;
  for (std::size_t j = 0; j < s.k(); ++j) {
    ExactOperator g = pauli_op(s.generator(j), budget);
    gens.push_back(negated[j] ? negate(g) : g);
  }
  // Gray code: consecutive group elements differ by one generator.
  ExactOperator current = ExactOperator::identity(s.n());
  ExactOperator sum = current;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << s.k()); ++x) {
    current = multiply(current, gens[static_cast<std::size_t>(std::countr_zero(x))]);
    sum = add(sum, current);
  }
  sum.set_scale(static_cast<int>(s.n()));
  return sum;
}

ExactOperator rho_graph_formula(const AdjacencyMatrix& theta, const Budget& budget) {
  const std::size_t n = theta.n();
  check_operator_budget(n, budget);
  ExactOperator sum(n);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    BitVector xv(n);
    for (std::size_t i = 0; i < n; ++i) xv[i] = (x >> i) & 1u;
    const BitVector u = gf2::matvec(theta.matrix(), xv);
    int k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) k ^= theta.edge(i, j) & xv[i] & xv[j];
    }
    const ExactOperator term = tau_op(u, xv, budget);
    sum = add(sum, k ? negate(term) : term);
  }
  sum.set_scale(static_cast<int>(n));
  return sum;
}

bool IndexPermutation::is_bijection() const {
  std::vector<bool> hit(image.size(), false);
  for (std::uint32_t j : image) {
    if (j >= image.size() || hit[j]) return false;
    hit[j] = true;
  }
  return true;
}

IndexPermutation IndexPermutation::compose(const IndexPermutation& then) const {
  if (then.image.size() != image.size()) throw DimensionError("IndexPermutation::compose: sizes differ");
  IndexPermutation out{qubits, copies, std::vector<std::uint32_t>(image.size())};
  for (std::size_t j = 0; j < image.size(); ++j) out.image[j] = then.image[image[j]];
  return out;
}

IndexPermutation t_pi(const TreeTuple& t, const Budget& budget) {
  const std::size_t n = t.qubits();
  const std::size_t r = t.degree();
  const std::size_t bits = n * r;
  if (bits >= 31 || (std::uint64_t{1} << bits) > budget.max_oracle_dim) {
    throw BudgetExceeded("t_pi: dimension 2^" + std::to_string(bits) + " exceeds budget " +
                         std::to_string(budget.max_oracle_dim));
  }
  std::vector<trees::Permutation> perms;
  for (const auto& tree : t.trees()) perms.push_back(trees::permutation_of(tree));
  auto bit_pos = [n, r](std::size_t copy, std::size_t qubit) { return (r - 1 - copy) * n + (n - 1 - qubit); };

  IndexPermutation out{n, r, std::vector<std::uint32_t>(std::size_t{1} << bits)};
  for (std::uint64_t j = 0; j < out.image.size(); ++j) {
    std::uint64_t image = 0;
    for (std::size_t c = 0; c < r; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((j >> bit_pos(perms[i][c], i)) & 1u) image |= std::uint64_t{1} << bit_pos(c, i);
      }
    }
    out.image[j] = static_cast<std::uint32_t>(image);
  }
  return out;
}

ExactOperator dense_permutation(const IndexPermutation& p, const Budget& budget) {
  check_operator_budget(p.qubits * p.copies, budget);
  ExactOperator out(p.qubits * p.copies);
  for (std::size_t j = 0; j < p.image.size(); ++j) out.at(p.image[j], j) = kOne;
  return out;
}

DyadicValue trace_permuted_product(const IndexPermutation& p, std::span<const ExactOperator> copies) {
  std::vector<const ExactOperator*> ptrs;
  for (const auto& op : copies) ptrs.push_back(&op);
  return trace_kernel(p, ptrs);
}

DyadicValue invariant_trace(const ExactOperator& rho, const TreeTuple& t, const Budget& budget) {
  if (rho.qubits() != t.qubits()) throw DimensionError("invariant_trace: operator and tuple disagree on n");
  const IndexPermutation p = t_pi(t, budget);
  return trace_kernel(p, std::vector<const ExactOperator*>(t.degree(), &rho));
}

DyadicValue invariant_trace(const GeneratorMatrix& s, const TreeTuple& t, const Budget& budget) {
  if (s.n() != t.qubits()) throw DimensionError("invariant_trace: code and tuple disagree on n");
  return invariant_trace(rho_from_code(s, budget), t, budget);
}

GaussInt a_generic(const trees::Permutation& pi, std::span<const Matrix2> ops) {
  const std::size_t r = pi.size();
  if (ops.size() != r) throw DimensionError("a_generic: need one matrix per copy");
  GaussInt sum{};
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << r); ++x) {
    GaussInt prod = kOne;
    for (std::size_t c = 0; c < r && !prod.is_zero(); ++c) {
      const std::size_t row = (x >> c) & 1u;
      const std::size_t col = (x >> pi[c]) & 1u;
      prod = prod * ops[c][2 * row + col];
    }
    sum += prod;
  }
  return sum;
}

GaussInt a_direct(const trees::Permutation& pi, const BitVector& u, const BitVector& v) {
  if (u.size() != pi.size() || v.size() != pi.size()) throw DimensionError("a_direct: u, v must have length r");
  std::vector<Matrix2> ops;
  for (std::size_t c = 0; c < pi.size(); ++c) ops.push_back(tau_entry_matrix(u[c], v[c]));
  return a_generic(pi, ops);
}

GaussInt a_closed(const trees::BinaryTree& tree, const BitVector& u, const BitVector& v) {
  const std::size_t r = tree.size();
  if (u.size() != r || v.size() != r) throw DimensionError("a_closed: u, v must have length r");
  const gf2::GF2Matrix rt = trees::r_matrix(tree).transpose();
  auto is_zero = [](const BitVector& b) {
    for (auto x : b) {
      if (x) return false;
    }
    return true;
  };
  if (!is_zero(gf2::matvec(rt, u)) || !is_zero(gf2::matvec(rt, v))) return {};
  const BitVector w = gf2::matvec(trees::d_matrix(tree).transpose(), v);
  int sign = 0;
  for (std::size_t i = 0; i < r; ++i) sign ^= u[i] & w[i];
  const std::int64_t magnitude = std::int64_t{1} << (r - trees::v_space_dimension(tree));
  return {sign ? -magnitude : magnitude, 0};
}

bool in_v_space(const AdjacencyMatrix& theta, const TreeTuple& t, std::span<const std::uint64_t> columns) {
  return VSpaceContext(theta, t).contains(columns);
}

int quadratic_form(const AdjacencyMatrix& theta, const TreeTuple& t, std::span<const std::uint64_t> columns) {
  return VSpaceContext(theta, t).q(columns);
}

Lemma4Result lemma4_check(const AdjacencyMatrix& theta, const TreeTuple& t, const Budget& budget) {
  const VSpaceContext ctx(theta, t);
  Lemma4Result out;
  for_each_matrix(ctx, budget, [&](std::span<const std::uint64_t> x) {
    ++out.space_size;
    if (ctx.q(x) != 0) {
      out.pass = false;
      out.counterexample = std::vector<std::uint64_t>(x.begin(), x.end());
      return false;
    }
    return true;
  });
  return out;
}

VSpaceSum v_space_sum(const AdjacencyMatrix& theta, const TreeTuple& t, const Budget& budget) {
  const VSpaceContext ctx(theta, t);
  VSpaceSum out;
  for_each_matrix(ctx, budget, [&](std::span<const std::uint64_t> x) {
    ++out.size;
    out.signed_sum += ctx.q(x) ? -1 : 1;
    return true;
  });
  return out;
}

Lemma3Result lemma3_check(const AdjacencyMatrix& theta, const TreeTuple& t, const Budget& budget) {
  Lemma3Result out;
  const AdjacencyMatrix empty(theta.n());
  out.sum = v_space_sum(theta, t, budget);
  out.reference_sum = v_space_sum(empty, t, budget);
  out.trace = invariant_trace(stabilizer::graph_generator(theta), t, budget);
  out.reference_trace = invariant_trace(stabilizer::graph_generator(empty), t, budget);
  const DyadicValue sum{{out.sum.signed_sum, 0}, 0};
  const DyadicValue ref{{out.reference_sum.signed_sum, 0}, 0};
  if (static_cast<std::uint64_t>(out.sum.signed_sum) != out.sum.size) {
    out.pass = false;
    out.detail = "signed sum " + std::to_string(out.sum.signed_sum) + " differs from |V_B(G)| = " +
                 std::to_string(out.sum.size);
  } else if (!(sum * out.reference_trace == ref * out.trace)) {
    // trace = sum / N with N = reference_sum / reference_trace.
    out.pass = false;
    out.detail = "normalization differs from the empty graph: trace " + out.trace.to_string() + ", sum " +
                 std::to_string(out.sum.signed_sum) + ", reference trace " + out.reference_trace.to_string() +
                 ", reference sum " + std::to_string(out.reference_sum.signed_sum);
  }
  return out;
}

std::optional<stabilizer::CliffordBlock> binary_action(const CliffordUnitary& u) {
  const std::int64_t norm = std::int64_t{1} << u.half_scale;
  auto image_of = [&](int pu, int pv) -> std::optional<std::pair<std::uint8_t, std::uint8_t>> {
    const Matrix2 conj = mul2(mul2(u.m, sigma_matrix(pu, pv)), adj2(u.m));
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const Matrix2 target = sigma_matrix(a, b);
        for (std::int64_t sign : {std::int64_t{1}, std::int64_t{-1}}) {
          bool match = true;
          for (std::size_t e = 0; e < 4 && match; ++e) {
            match = conj[e] == GaussInt{target[e].re * sign * norm, target[e].im * sign * norm};
          }
          if (match) return std::pair{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
        }
      }
    }
    return std::nullopt;
  };
  const auto z = image_of(1, 0);
  const auto x = image_of(0, 1);
  if (!z || !x) return std::nullopt;
  stabilizer::CliffordBlock blk{z->first, x->first, z->second, x->second};
  if (!blk.invertible()) return std::nullopt;
  return blk;
}

CliffordUnitary clifford_unitary(const stabilizer::CliffordBlock& block) {
  static const std::map<std::array<std::uint8_t, 4>, CliffordUnitary> table = [] {
    const CliffordUnitary h{{kOne, kOne, kOne, -kOne}, 1};
    const CliffordUnitary s{{kOne, kZero, kZero, kI}, 0};
    std::map<std::array<std::uint8_t, 4>, CliffordUnitary> found;
    std::vector<CliffordUnitary> frontier{{{kOne, kZero, kZero, kOne}, 0}};
    for (int depth = 0; depth < 5 && found.size() < 6; ++depth) {
      std::vector<CliffordUnitary> next;
      for (const auto& w : frontier) {
        if (auto blk = binary_action(w)) found.emplace(std::array{blk->a, blk->b, blk->c, blk->d}, w);
        for (const auto& g : {h, s}) next.push_back({mul2(w.m, g.m), w.half_scale + g.half_scale});
      }
      frontier = std::move(next);
    }
    return found;
  }();
  auto it = table.find({block.a, block.b, block.c, block.d});
  if (it == table.end()) throw std::invalid_argument("clifford_unitary: block is not invertible");
  return it->second;
}

ExactOperator conjugate_local(const ExactOperator& rho, const stabilizer::LocalCliffordOp& q, const Budget& budget) {
  if (rho.qubits() != q.n()) throw DimensionError("conjugate_local: qubit counts differ");
  check_operator_budget(q.n(), budget);
  ExactOperator u = ExactOperator::identity(0);
  int half = 0;
  for (std::size_t i = 0; i < q.n(); ++i) {
    const CliffordUnitary f = clifford_unitary(q.block(i));
    u = kron(u, ExactOperator::from_matrix2(f.m));
    half += f.half_scale;
  }
  ExactOperator out = multiply(multiply(u, rho), adjoint(u));
  // (m / sqrt2^h) rho (m / sqrt2^h)^dagger carries 2^-h in total.
  out.set_scale(out.scale() + half);
  return out;
}

}  // namespace stabinv::oracle
