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

#include "stabinv/stabilizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "stabinv/errors.hpp"

namespace stabinv::stabilizer {

namespace {

bool random_bit(std::mt19937_64& rng) { return (rng() >> 17) & 1u; }

GF2Matrix random_full_rank(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  for (;;) {
    GF2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_bit(rng));
    }
    if (gf2::rank(m) == std::min(rows, cols)) return m;
  }
}

}  // namespace

QubitSet complement(const QubitSet& omega, std::size_t n) {
  QubitSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(omega.begin(), omega.end(), i)) out.push_back(i);
  }
  return out;
}

GeneratorMatrix::GeneratorMatrix(GF2Matrix matrix) : n_(matrix.rows() / 2), s_(std::move(matrix)) {
  if (s_.rows() % 2 != 0) throw DimensionError("GeneratorMatrix: row count must be even (2n)");
}

GeneratorMatrix GeneratorMatrix::trivial(std::size_t n) { return GeneratorMatrix(GF2Matrix(2 * n, 0)); }

std::string_view violation_name(Violation v) {
  switch (v) {
    case Violation::kNone:
      return "ok";
    case Violation::kBadShape:
      return "bad-shape";
    case Violation::kNotFullRank:
      return "not-full-rank";
    case Violation::kNotSelfOrthogonal:
      return "not-self-orthogonal";
  }
  return "unknown";
}

ValidationReport validate(const GeneratorMatrix& s) {
  if (s.k() > s.n()) {
    return {Violation::kBadShape, "k = " + std::to_string(s.k()) + " exceeds n = " + std::to_string(s.n())};
  }
  const std::size_t r = gf2::rank(s.matrix());
  if (r != s.k()) {
    return {Violation::kNotFullRank, "rank " + std::to_string(r) + " < k = " + std::to_string(s.k())};
  }
  for (std::size_t a = 0; a < s.k(); ++a) {
    const BitVector ga = s.generator(a);
    for (std::size_t b = a + 1; b < s.k(); ++b) {
      if (symplectic_product(ga, s.generator(b)) != 0) {
        return {Violation::kNotSelfOrthogonal,
                "generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " anticommute"};
      }
    }
  }
  return {};
}

GF2Matrix symplectic_form(std::size_t n) {
  GF2Matrix p(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    p.set(i, n + i, true);
    p.set(n + i, i, true);
  }
  return p;
}

int symplectic_product(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size() || a.size() % 2 != 0) {
    throw DimensionError("symplectic_product: vectors must have equal even length");
  }
  const std::size_t n = a.size() / 2;
  int acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc ^= (a[i] & b[n + i]) ^ (a[n + i] & b[i]);
  return acc & 1;
}

GF2Matrix qubit_subblock(const GeneratorMatrix& s, std::size_t qubit) {
  if (qubit >= s.n()) throw std::out_of_range("qubit_subblock: qubit index out of range");
  const std::array<std::size_t, 2> rows{qubit, s.n() + qubit};
  return gf2::select_rows(s.matrix(), rows);
}

QubitSet support(const BitVector& v) {
  if (v.size() % 2 != 0) throw DimensionError("support: vector length must be even");
  const std::size_t n = v.size() / 2;
  QubitSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] || v[n + i]) out.push_back(i);
  }
  return out;
}

GeneratorMatrix restrict_to(const GeneratorMatrix& s, const QubitSet& omega) {
  const std::size_t n = s.n();
  for (std::size_t i : omega) {
    if (i >= n) throw std::out_of_range("restrict_to: qubit index out of range");
  }
  std::vector<std::size_t> off_rows;
  for (std::size_t i : complement(omega, n)) {
    off_rows.push_back(i);
    off_rows.push_back(n + i);
  }
  // x with S_j x = 0 for every j outside omega; injectivity of S keeps dim.
  const GF2Matrix x_space = gf2::kernel_basis(gf2::select_rows(s.matrix(), off_rows));
  const GF2Matrix y = gf2::multiply(s.matrix(), x_space);
  std::vector<std::size_t> keep;
  for (std::size_t i : omega) keep.push_back(i);
  for (std::size_t i : omega) keep.push_back(n + i);
  return GeneratorMatrix(gf2::select_rows(y, keep));
}

AdjacencyMatrix AdjacencyMatrix::from_matrix(GF2Matrix theta) {
  if (theta.rows() != theta.cols()) throw std::invalid_argument("AdjacencyMatrix: not square");
  for (std::size_t i = 0; i < theta.rows(); ++i) {
    if (theta.get(i, i)) throw std::invalid_argument("AdjacencyMatrix: nonzero diagonal");
    for (std::size_t j = i + 1; j < theta.cols(); ++j) {
      if (theta.get(i, j) != theta.get(j, i)) throw std::invalid_argument("AdjacencyMatrix: not symmetric");
    }
  }
  AdjacencyMatrix out;
  out.theta_ = std::move(theta);
  return out;
}

AdjacencyMatrix AdjacencyMatrix::from_edges(std::size_t n,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  GF2Matrix theta(n, n);
  for (auto [i, j] : edges) {
    if (i >= n || j >= n || i == j) throw std::invalid_argument("AdjacencyMatrix: bad edge");
    theta.set(i, j, true);
    theta.set(j, i, true);
  }
  return from_matrix(std::move(theta));
}

AdjacencyMatrix AdjacencyMatrix::from_index(std::size_t n, std::uint64_t index) {
  GF2Matrix theta(n, n);
  std::size_t e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++e) {
      if ((index >> e) & 1u) {
        theta.set(i, j, true);
        theta.set(j, i, true);
      }
    }
  }
  return from_matrix(std::move(theta));
}

std::uint64_t AdjacencyMatrix::graph_count(std::size_t n) { return std::uint64_t{1} << (n * (n - (n > 0)) / 2); }

GeneratorMatrix graph_generator(const AdjacencyMatrix& theta) {
  const std::size_t n = theta.n();
  const std::array<GF2Matrix, 2> parts{theta.matrix(), GF2Matrix::identity(n)};
  return GeneratorMatrix(gf2::stack_rows(parts, n));
}

const std::array<CliffordBlock, 6>& CliffordBlock::all() {
  static const std::array<CliffordBlock, 6> blocks{{
      {1, 0, 0, 1},
      {0, 1, 1, 0},
      {1, 1, 0, 1},
      {1, 0, 1, 1},
      {0, 1, 1, 1},
      {1, 1, 1, 0},
  }};
  return blocks;
}

LocalCliffordOp::LocalCliffordOp(std::vector<CliffordBlock> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (!b.invertible()) throw std::invalid_argument("LocalCliffordOp: singular block");
  }
}

LocalCliffordOp LocalCliffordOp::identity(std::size_t n) { return LocalCliffordOp(std::vector<CliffordBlock>(n)); }

LocalCliffordOp LocalCliffordOp::inverse() const {
  std::vector<CliffordBlock> inv;
  inv.reserve(blocks_.size());
  for (const auto& b : blocks_) inv.push_back(b.inverse());
  return LocalCliffordOp(std::move(inv));
}

GF2Matrix LocalCliffordOp::full_matrix() const {
  const std::size_t n = blocks_.size();
  GF2Matrix q(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    q.set(i, i, blocks_[i].a);
    q.set(i, n + i, blocks_[i].b);
    q.set(n + i, i, blocks_[i].c);
    q.set(n + i, n + i, blocks_[i].d);
  }
  return q;
}

GeneratorMatrix apply_local_clifford(const LocalCliffordOp& q, const GeneratorMatrix& s) {
  if (q.n() != s.n()) throw DimensionError("apply_local_clifford: qubit counts differ");
  const std::size_t n = s.n();
  GF2Matrix out(2 * n, s.k());
  for (std::size_t i = 0; i < n; ++i) {
    const CliffordBlock& blk = q.block(i);
    for (std::size_t j = 0; j < s.k(); ++j) {
      auto [u, v] = blk.apply(s.matrix().get(i, j), s.matrix().get(n + i, j));
      out.set(i, j, u);
      out.set(n + i, j, v);
    }
  }
  return GeneratorMatrix(std::move(out));
}

LocalCliffordOp random_local_clifford(std::size_t n, std::mt19937_64& rng) {
  std::vector<CliffordBlock> blocks;
  blocks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(CliffordBlock::all()[rng() % 6]);
  return LocalCliffordOp(std::move(blocks));
}

AdjacencyMatrix random_graph(std::size_t n, std::mt19937_64& rng) {
  GF2Matrix theta(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (random_bit(rng)) {
        theta.set(i, j, true);
        theta.set(j, i, true);
      }
    }
  }
  return AdjacencyMatrix::from_matrix(std::move(theta));
}

GeneratorMatrix random_code(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) throw std::invalid_argument("random_code: k must not exceed n");
  std::mt19937_64 rng(seed);
  const GeneratorMatrix graph = graph_generator(random_graph(n, rng));
  std::vector<std::size_t> cols(k);
  for (std::size_t j = 0; j < k; ++j) cols[j] = j;
  const GeneratorMatrix sub(gf2::select_cols(graph.matrix(), cols));
  return apply_local_clifford(random_local_clifford(n, rng), sub);
}

GeneratorMatrix random_subcode(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) throw std::invalid_argument("random_subcode: k must not exceed n");
  std::mt19937_64 rng(seed);
  const GeneratorMatrix graph = graph_generator(random_graph(n, rng));
  const GF2Matrix pick = random_full_rank(n, k, rng);
  const GeneratorMatrix sub(gf2::multiply(graph.matrix(), pick));
  return apply_local_clifford(random_local_clifford(n, rng), sub);
}

bool same_code_space(const GeneratorMatrix& a, const GeneratorMatrix& b) {
  if (a.n() != b.n()) return false;
  const std::size_t ra = gf2::rank(a.matrix());
  const std::size_t rb = gf2::rank(b.matrix());
  if (ra != rb) return false;
  const std::array<GF2Matrix, 2> both{a.matrix(), b.matrix()};
  return gf2::rank(gf2::concat_cols(both, 2 * a.n())) == ra;
}

GeneratorMatrix canonical_form(const GeneratorMatrix& s) {
  const gf2::EchelonForm ech = gf2::row_echelon(s.matrix().transpose());
  GF2Matrix basis_rows(ech.pivots.size(), s.matrix().rows());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    auto src = ech.matrix.row(i);
    std::copy(src.begin(), src.end(), basis_rows.row(i).begin());
  }
  return GeneratorMatrix(basis_rows.transpose());
}

GeneratorMatrix change_basis(const GeneratorMatrix& s, const GF2Matrix& m) {
  return GeneratorMatrix(gf2::multiply(s.matrix(), m));
}

GeneratorMatrix permute_qubits(const GeneratorMatrix& s, const std::vector<std::size_t>& perm) {
  const std::size_t n = s.n();
  if (perm.size() != n) throw DimensionError("permute_qubits: permutation length differs from n");
  std::vector<std::size_t> rows(2 * n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n) throw std::out_of_range("permute_qubits: index out of range");
    if (used[perm[i]]) throw std::invalid_argument("permute_qubits: not a permutation");
    used[perm[i]] = true;
    rows[i] = perm[i];
    rows[n + i] = n + perm[i];
  }
  return GeneratorMatrix(gf2::select_rows(s.matrix(), rows));
}

std::vector<BitVector> code_space_elements(const GeneratorMatrix& s) {
  const std::size_t k = s.k();
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    BitVector xv(k);
    for (std::size_t j = 0; j < k; ++j) xv[j] = (x >> j) & 1u;
    out.push_back(gf2::matvec(s.matrix(), xv));
  }
  return out;
}

GeneratorMatrix from_pauli_strings(const std::vector<std::string>& generators, std::size_t n) {
  std::vector<std::string> bodies;
  for (const auto& g : generators) {
    std::string_view body = g;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
    bodies.emplace_back(body);
  }
  if (!bodies.empty()) n = bodies.front().size();
  GF2Matrix s(2 * n, bodies.size());
  for (std::size_t j = 0; j < bodies.size(); ++j) {
    if (bodies[j].size() != n) {
      throw ParseError("Pauli string " + std::to_string(j + 1) + " has length " + std::to_string(bodies[j].size()) +
                           ", expected " + std::to_string(n),
                       0);
    }
    for (std::size_t i = 0; i < n; ++i) {
      switch (bodies[j][i]) {
        case 'I':
        case '_':
          break;
        case 'X':
          s.set(n + i, j, true);
          break;
        case 'Z':
          s.set(i, j, true);
          break;
        case 'Y':
          s.set(i, j, true);
          s.set(n + i, j, true);
          break;
        default:
          throw ParseError(std::string("unknown Pauli letter '") + bodies[j][i] + "'", 0);
      }
    }
  }
  return GeneratorMatrix(std::move(s));
}

std::string to_pauli_string(const BitVector& column) {
  const std::size_t n = column.size() / 2;
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};  // index 2u + v
  std::string out(n, 'I');
  for (std::size_t i = 0; i < n; ++i) out[i] = kLetters[2 * (column[i] & 1u) + (column[n + i] & 1u)];
  return out;
}

}  // namespace stabinv::stabilizer
