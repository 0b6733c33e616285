#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "expdist/rational.hpp"

namespace expdist {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Zero-width and zero-height
/// matrices are valid values.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch when `entries.size() != rows * cols`.
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Convenience for literals in tests; all rows must have equal length.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix ones(std::size_t rows, std::size_t cols);
  static RationalMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static RationalMatrix diagonal(std::span<const Rational> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  RationalMatrix transpose() const;
  /// Copy of the `n_rows x n_cols` sub-block starting at (`row0`, `col0`).
  RationalMatrix block(std::size_t row0, std::size_t col0, std::size_t n_rows,
                       std::size_t n_cols) const;
  void set_block(std::size_t row0, std::size_t col0, const RationalMatrix& value);
  /// Rows and columns reordered so that result(i, j) = (*this)(order[i], order[j]).
  RationalMatrix permuted(std::span<const std::size_t> order) const;

  Rational sum() const;
  bool is_symmetric() const;
  bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& rhs);
  RationalMatrix& operator-=(const RationalMatrix& rhs);
  RationalMatrix& operator*=(const Rational& scalar);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact product; throws DimensionMismatch when `a.cols() != b.rows()`.
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);

/// Same shape and every entry exactly equal.
bool mat_equal(const RationalMatrix& a, const RationalMatrix& b);

/// First coordinate where two matrices differ, with both values.
struct EntryMismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational expected;
  Rational actual;
  bool shape_mismatch = false;
};

/// `std::nullopt` when equal.
std::optional<EntryMismatch> first_mismatch(const RationalMatrix& expected,
                                            const RationalMatrix& actual);

std::string to_string(const RationalMatrix& m);

}  // namespace expdist
