#include "expdist/oracle.hpp"

#include <utility>
#include <vector>

#include "expdist/error.hpp"

namespace expdist {

namespace {

/// Square integer matrix together with the per-row factors used to clear
/// denominators: int_row_i = scale_i * rational_row_i.
struct IntegerForm {
  std::size_t n = 0;
  std::vector<mpz_class> entries;
  std::vector<mpz_class> row_scale;
};

void require_square(const RationalMatrix& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " of non-square matrix");
}

IntegerForm integerize(const RationalMatrix& m) {
  IntegerForm out;
  out.n = m.rows();
  out.entries.resize(out.n * out.n);
  out.row_scale.resize(out.n);
  for (std::size_t i = 0; i < out.n; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < out.n; ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < out.n; ++j) {
      const mpq_class& v = m(i, j).raw();
      mpz_class& dst = out.entries[i * out.n + j];
      mpz_divexact(dst.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
      dst *= v.get_num();
    }
    out.row_scale[i] = std::move(scale);
  }
  return out;
}

/// Bareiss elimination in place on an n x n row-major integer matrix.
mpz_class bareiss_det(std::vector<mpz_class> a, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  mpz_class tmp;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      sign = -sign;
    }
    const mpz_class& akk = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpz_class aik = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class& aij = a[i * n + j];
        aij *= akk;
        if (aik != 0) {
          tmp = aik * a[k * n + j];
          aij -= tmp;
        }
        mpz_divexact(aij.get_mpz_t(), aij.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = akk;
  }
  mpz_class det = a[(n - 1) * n + (n - 1)];
  if (sign < 0) det = -det;
  return det;
}

mpz_class product_of(const std::vector<mpz_class>& values) {
  mpz_class p = 1;
  for (const auto& v : values) p *= v;
  return p;
}

}  // namespace

Rational oracle_det(const RationalMatrix& m) {
  require_square(m, "determinant");
  IntegerForm form = integerize(m);
  const mpz_class det = bareiss_det(std::move(form.entries), form.n);
  return Rational(det, product_of(form.row_scale));
}

RationalMatrix oracle_inverse(const RationalMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  const std::size_t width = 2 * n;
  std::vector<mpq_class> a(n * width, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * width + j] = m(i, j).raw();
    a[i * width + n + i] = 1;
  }
  mpq_class factor;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(a[pivot * width + k]) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::SingularMatrix, "no pivot in column " + std::to_string(k));
    if (pivot != k) {
      for (std::size_t j = 0; j < width; ++j) std::swap(a[k * width + j], a[pivot * width + j]);
    }
    const mpq_class inv_pivot = 1 / a[k * width + k];
    for (std::size_t j = k; j < width; ++j) {
      if (sgn(a[k * width + j]) != 0) a[k * width + j] *= inv_pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      factor = a[i * width + k];
      if (sgn(factor) == 0) continue;
      for (std::size_t j = k; j < width; ++j) {
        const mpq_class& akj = a[k * width + j];
        if (sgn(akj) != 0) a[i * width + j] -= factor * akj;
      }
    }
  }
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries.emplace_back(std::move(a[i * width + n + j]));
  return {n, n, std::move(entries)};
}

Rational adjugate_sum_by_inverse(const RationalMatrix& m) {
  const Rational det = oracle_det(m);
  if (det.is_zero()) throw Error(ErrorKind::SingularMatrix, "cofactor sum via inverse of singular matrix");
  return det * oracle_inverse(m).sum();
}

Rational adjugate_sum_by_row_expansion(const RationalMatrix& m) {
  require_square(m, "cofactor sum");
  if (m.rows() == 0) throw Error(ErrorKind::DimensionMismatch, "cofactor sum of empty matrix");
  const IntegerForm form = integerize(m);
  const std::size_t n = form.n;
  const mpz_class all_scales = product_of(form.row_scale);
  // Replacing row i by ones changes the row scale from scale_i to 1, so
  // det(rational) = det(integer) * scale_i / prod(scales).
  mpz_class total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpz_class> a = form.entries;
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 1;
    total += bareiss_det(std::move(a), n) * form.row_scale[i];
  }
  return Rational(total, all_scales);
}

Rational adjugate_sum_by_minors(const RationalMatrix& m) {
  require_square(m, "cofactor sum");
  if (m.rows() == 0) throw Error(ErrorKind::DimensionMismatch, "cofactor sum of empty matrix");
  const std::size_t n = m.rows();
  Rational total;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RationalMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const Rational d = oracle_det(minor);
      if ((i + j) % 2 == 0) total += d; else total -= d;
    }
  }
  return total;
}

Rational oracle_adjugate_sum(const RationalMatrix& m) {
  require_square(m, "cofactor sum");
  if (m.rows() == 0) throw Error(ErrorKind::DimensionMismatch, "cofactor sum of empty matrix");
  const Rational det = oracle_det(m);
  if (!det.is_zero()) return det * oracle_inverse(m).sum();
  return adjugate_sum_by_row_expansion(m);
}

}  // namespace expdist
