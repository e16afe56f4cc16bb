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
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace stabinv::gf2 {

/// Dense bit vector, one byte per entry holding 0 or 1.
using BitVector = std::vector<std::uint8_t>;

/// Row-major bit-packed matrix over GF(2). Each row occupies
/// words_per_row() 64-bit words; bits past cols() in the last word are zero.
/// Zero-row and zero-column matrices are valid values.
class GF2Matrix {
 public:
  static constexpr std::size_t kWordBits = 64;

  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  static GF2Matrix identity(std::size_t n);
  /// Builds from nested 0/1 literals; all rows must have equal length.
  static GF2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  /// Builds from '0'/'1' strings, one per row. With no rows, `cols` gives the width.
  static GF2Matrix from_strings(const std::vector<std::string>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    std::uint64_t& w = data_[r * words_ + c / kWordBits];
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * words_ + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
  }

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * words_, words_}; }

  /// Row r as a bit vector; column c as a bit vector.
  BitVector row_bits(std::size_t r) const;
  BitVector col_bits(std::size_t c) const;
  void set_col(std::size_t c, const BitVector& bits);

  GF2Matrix transpose() const;
  bool is_zero() const;
  std::size_t popcount() const;

  /// Rows as '0'/'1' strings joined by '\n' (no trailing newline).
  std::string to_string() const;

  bool operator==(const GF2Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Row rank over GF(2). Word-XOR Gaussian elimination, pivoting left to right
/// on the first nonzero row at or below the current one. Large matrices
/// eliminate in parallel.
std::size_t rank(const GF2Matrix& m);

/// cols - rank; 0 for a matrix with no columns.
std::size_t kernel_dimension(const GF2Matrix& m);

/// Columns form a basis of {x : m x = 0}; shape cols x kernel_dimension.
GF2Matrix kernel_basis(const GF2Matrix& m);

/// Reduced row echelon form, plus pivot columns in increasing order.
struct EchelonForm {
  GF2Matrix matrix;
  std::vector<std::size_t> pivots;
};
EchelonForm row_echelon(const GF2Matrix& m);

/// Entry (i*b.rows + p, j*b.cols + q) = a(i,j) * b(p,q).
GF2Matrix kron(const GF2Matrix& a, const GF2Matrix& b);

/// Vertical concatenation. With no blocks, returns `cols`-wide empty matrix.
/// Throws DimensionError on mismatched column counts.
GF2Matrix stack_rows(std::span<const GF2Matrix> blocks, std::size_t cols = 0);

/// Horizontal concatenation. Throws DimensionError on mismatched row counts.
GF2Matrix concat_cols(std::span<const GF2Matrix> blocks, std::size_t rows = 0);

GF2Matrix multiply(const GF2Matrix& a, const GF2Matrix& b);
BitVector matvec(const GF2Matrix& m, const BitVector& x);
GF2Matrix transpose(const GF2Matrix& m);

/// Selects the given rows, in the given order.
GF2Matrix select_rows(const GF2Matrix& m, std::span<const std::size_t> rows);
/// Selects the given columns, in the given order.
GF2Matrix select_cols(const GF2Matrix& m, std::span<const std::size_t> cols);

/// Text form: one row per line of '0'/'1' characters; a blank line or end of
/// input terminates. Throws ParseError with a line number on bad characters
/// or ragged rows.
GF2Matrix read_text(std::istream& in);
void write_text(std::ostream& out, const GF2Matrix& m);

}  // namespace stabinv::gf2
