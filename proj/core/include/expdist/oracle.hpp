#pragma once

#include "expdist/matrix.hpp"
#include "expdist/rational.hpp"

// Brute-force exact linear algebra. These routines know nothing about graphs
// and serve as the reference every closed form is compared against.
namespace expdist {

/// Determinant by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers by the lcm of its denominators, so the elimination runs
/// on big integers with exact divisions. The 0x0 determinant is 1.
/// Throws DimensionMismatch for non-square input.
Rational oracle_det(const RationalMatrix& m);

/// Inverse by exact Gauss-Jordan elimination on [m | I], pivoting on the first
/// nonzero entry of each column. Throws SingularMatrix or DimensionMismatch.
RationalMatrix oracle_inverse(const RationalMatrix& m);

/// Sum of all entries of the adjugate (the cofactor sum). Uses
/// det(m) * sum(m^-1) when m is invertible and the cofactor expansion route
/// otherwise. Requires a square matrix with at least one row.
Rational oracle_adjugate_sum(const RationalMatrix& m);

/// Cofactor sum by expansion: for each row i, the cofactors of row i sum to the
/// determinant of m with row i replaced by all ones. n determinants of size n.
Rational adjugate_sum_by_row_expansion(const RationalMatrix& m);

/// Literal definition: sum over (i, j) of (-1)^(i+j) det(minor_ij). n^2
/// determinants of size n-1; intended for small cross-checks.
Rational adjugate_sum_by_minors(const RationalMatrix& m);

/// Cofactor sum via the inverse: det(m) * sum(m^-1). Throws SingularMatrix.
Rational adjugate_sum_by_inverse(const RationalMatrix& m);

}  // namespace expdist
