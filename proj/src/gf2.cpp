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

#include "stabinv/gf2.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <utility>

#include "stabinv/errors.hpp"

namespace stabinv::gf2 {

namespace {

std::size_t words_for(std::size_t cols) { return (cols + GF2Matrix::kWordBits - 1) / GF2Matrix::kWordBits; }

// dst[offset .. offset+len) ^= src[0 .. len). Padding bits of src are zero, so
// nothing is written past offset+len.
void xor_shifted(std::span<std::uint64_t> dst, std::size_t offset, std::span<const std::uint64_t> src,
                 std::size_t len) {
  const std::size_t nwords = words_for(len);
  const std::size_t base = offset / GF2Matrix::kWordBits;
  const std::size_t shift = offset % GF2Matrix::kWordBits;
  for (std::size_t w = 0; w < nwords; ++w) {
    const std::uint64_t v = src[w];
    dst[base + w] ^= v << shift;
    if (shift != 0 && base + w + 1 < dst.size()) {
      dst[base + w + 1] ^= v >> (GF2Matrix::kWordBits - shift);
    }
  }
}

void xor_row_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

// Below this many words of pending elimination work per pivot the OpenMP
// team is not worth waking.
constexpr std::size_t kParallelWorkWords = std::size_t{1} << 14;

}  // namespace

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  GF2Matrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionError("GF2Matrix::from_rows: ragged rows");
    std::size_t c = 0;
    for (int v : row) m.set(r, c++, (v & 1) != 0);
    ++r;
  }
  return m;
}

GF2Matrix GF2Matrix::from_strings(const std::vector<std::string>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  GF2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("GF2Matrix::from_strings: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw DimensionError("GF2Matrix::from_strings: expected '0' or '1'");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

BitVector GF2Matrix::row_bits(std::size_t r) const {
  BitVector out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = get(r, c);
  return out;
}

BitVector GF2Matrix::col_bits(std::size_t c) const {
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = get(r, c);
  return out;
}

void GF2Matrix::set_col(std::size_t c, const BitVector& bits) {
  if (bits.size() != rows_) throw DimensionError("GF2Matrix::set_col: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, bits[r] != 0);
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

bool GF2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t GF2Matrix::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : data_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string GF2Matrix::to_string() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) out.push_back('\n');
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
  }
  return out;
}

std::size_t rank(const GF2Matrix& m) {
  GF2Matrix work = m;
  const std::size_t rows = work.rows();
  const std::size_t words = work.words_per_row();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < work.cols() && rank < rows; ++c) {
    const std::size_t w = c / GF2Matrix::kWordBits;
    const std::uint64_t mask = std::uint64_t{1} << (c % GF2Matrix::kWordBits);
    std::size_t pivot = rank;
    while (pivot < rows && (work.row(pivot)[w] & mask) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      auto a = work.row(pivot);
      auto b = work.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const std::span<const std::uint64_t> pivot_row = work.row(rank);
    const std::ptrdiff_t first = static_cast<std::ptrdiff_t>(rank + 1);
    const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(rows);
    // Only words from w onward can be nonzero in the pivot row.
    const bool parallel = static_cast<std::size_t>(last - first) * (words - w) >= kParallelWorkWords;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t r = first; r < last; ++r) {
      auto dst = work.row(static_cast<std::size_t>(r));
      if (dst[w] & mask) {
        for (std::size_t k = w; k < words; ++k) dst[k] ^= pivot_row[k];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t kernel_dimension(const GF2Matrix& m) { return m.cols() - rank(m); }

EchelonForm row_echelon(const GF2Matrix& m) {
  EchelonForm out{m, {}};
  GF2Matrix& work = out.matrix;
  const std::size_t rows = work.rows();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < work.cols() && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && !work.get(pivot, c)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      auto a = work.row(pivot);
      auto b = work.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && work.get(r, c)) xor_row_into(work.row(r), work.row(rank));
    }
    out.pivots.push_back(c);
    ++rank;
  }
  return out;
}

GF2Matrix kernel_basis(const GF2Matrix& m) {
  const EchelonForm ech = row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  GF2Matrix basis(cols, cols - ech.pivots.size());
  std::size_t out_col = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    basis.set(f, out_col, true);
    // Pivot variable in echelon row i equals the sum of that row's free entries.
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      if (ech.matrix.get(i, f)) basis.set(ech.pivots[i], out_col, true);
    }
    ++out_col;
  }
  return basis;
}

GF2Matrix kron(const GF2Matrix& a, const GF2Matrix& b) {
  GF2Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.get(i, j)) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        xor_shifted(out.row(i * b.rows() + p), j * b.cols(), b.row(p), b.cols());
      }
    }
  }
  return out;
}

GF2Matrix stack_rows(std::span<const GF2Matrix> blocks, std::size_t cols) {
  if (!blocks.empty()) cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionError("stack_rows: blocks have different column counts");
    rows += b.rows();
  }
  GF2Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      auto src = b.row(r);
      std::copy(src.begin(), src.end(), out.row(r0 + r).begin());
    }
    r0 += b.rows();
  }
  return out;
}

GF2Matrix concat_cols(std::span<const GF2Matrix> blocks, std::size_t rows) {
  if (!blocks.empty()) rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionError("concat_cols: blocks have different row counts");
    cols += b.cols();
  }
  GF2Matrix out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r) xor_shifted(out.row(r), c0, b.row(r), b.cols());
    c0 += b.cols();
  }
  return out;
}

GF2Matrix multiply(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("multiply: inner dimensions differ");
  GF2Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.get(i, j)) xor_row_into(dst, b.row(j));
    }
  }
  return out;
}

BitVector matvec(const GF2Matrix& m, const BitVector& x) {
  if (x.size() != m.cols()) throw DimensionError("matvec: vector length differs from column count");
  BitVector y(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc ^= static_cast<std::uint8_t>(m.get(i, j) & (x[j] & 1u));
    y[i] = acc;
  }
  return y;
}

GF2Matrix transpose(const GF2Matrix& m) { return m.transpose(); }

GF2Matrix select_rows(const GF2Matrix& m, std::span<const std::size_t> rows) {
  GF2Matrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= m.rows()) throw DimensionError("select_rows: row index out of range");
    auto src = m.row(rows[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

GF2Matrix select_cols(const GF2Matrix& m, std::span<const std::size_t> cols) {
  GF2Matrix out(m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= m.cols()) throw DimensionError("select_cols: column index out of range");
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.get(r, cols[j])) out.set(r, j, true);
    }
  }
  return out;
}

GF2Matrix read_text(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) break;
    for (char ch : line) {
      if (ch != '0' && ch != '1') throw ParseError("expected only '0' and '1' characters", line_no);
    }
    if (!rows.empty() && line.size() != rows.front().size()) {
      throw ParseError("row length " + std::to_string(line.size()) + " differs from " +
                           std::to_string(rows.front().size()),
                       line_no);
    }
    rows.push_back(line);
  }
  return GF2Matrix::from_strings(rows);
}

void write_text(std::ostream& out, const GF2Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (m.get(r, c) ? '1' : '0');
    out << '\n';
  }
}

}  // namespace stabinv::gf2
