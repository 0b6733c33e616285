#include "expdist/matrix.hpp"

#include <sstream>

#include "expdist/error.hpp"

namespace expdist {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = n_rows == 0 ? 0 : rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(n_rows * n_cols);
  for (const auto& row : rows) {
    if (row.size() != n_cols) throw Error(ErrorKind::DimensionMismatch, "ragged row list");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {n_rows, n_cols, std::move(entries)};
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::ones(std::size_t rows, std::size_t cols) {
  return {rows, cols, std::vector<Rational>(rows * cols, Rational(1))};
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> values) {
  RationalMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::block(std::size_t row0, std::size_t col0, std::size_t n_rows,
                                     std::size_t n_cols) const {
  if (row0 + n_rows > rows_ || col0 + n_cols > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block exceeds matrix bounds");
  }
  RationalMatrix out(n_rows, n_cols);
  for (std::size_t i = 0; i < n_rows; ++i)
    for (std::size_t j = 0; j < n_cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  return out;
}

void RationalMatrix::set_block(std::size_t row0, std::size_t col0, const RationalMatrix& value) {
  if (row0 + value.rows_ > rows_ || col0 + value.cols_ > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block exceeds matrix bounds");
  }
  for (std::size_t i = 0; i < value.rows_; ++i)
    for (std::size_t j = 0; j < value.cols_; ++j) (*this)(row0 + i, col0 + j) = value(i, j);
}

RationalMatrix RationalMatrix::permuted(std::span<const std::size_t> order) const {
  if (!is_square() || order.size() != rows_) {
    throw Error(ErrorKind::DimensionMismatch, "permutation length does not match matrix");
  }
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(order[i], order[j]);
  return out;
}

Rational RationalMatrix::sum() const {
  mpq_class acc = 0;
  for (const auto& e : entries_) acc += e.raw();
  return Rational(acc);
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum of different shapes");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix difference of different shapes");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return mat_mul(a, b); }

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ in product");
  }
  const std::size_t n = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t m = b.cols();
  std::vector<mpq_class> acc(n * m, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const mpq_class& aik = a(i, k).raw();
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const mpq_class& bkj = b(k, j).raw();
        if (sgn(bkj) == 0) continue;
        acc[i * m + j] += aik * bkj;
      }
    }
  }
  std::vector<Rational> entries;
  entries.reserve(acc.size());
  for (auto& v : acc) entries.emplace_back(std::move(v));
  return {n, m, std::move(entries)};
}

bool mat_equal(const RationalMatrix& a, const RationalMatrix& b) { return a == b; }

std::optional<EntryMismatch> first_mismatch(const RationalMatrix& expected,
                                            const RationalMatrix& actual) {
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
    EntryMismatch m;
    m.shape_mismatch = true;
    return m;
  }
  for (std::size_t i = 0; i < expected.rows(); ++i)
    for (std::size_t j = 0; j < expected.cols(); ++j)
      if (expected(i, j) != actual(i, j)) return EntryMismatch{i, j, expected(i, j), actual(i, j)};
  return std::nullopt;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace expdist
