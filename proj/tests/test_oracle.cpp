#include <gtest/gtest.h>

#include <random>

#include "expdist/edm.hpp"
#include "expdist/error.hpp"
#include "expdist/matrix.hpp"
#include "expdist/oracle.hpp"
#include "support.hpp"

namespace expdist {
namespace {

using testing::R;

RationalMatrix two_by_two(const Rational& q) { return RationalMatrix::from_rows({{1, q}, {q, 1}}); }

TEST(MatMul, IdentityIsNeutral) {
  std::mt19937_64 rng(1);
  const RationalMatrix m = testing::random_matrix(rng, 3, 4);
  EXPECT_EQ(mat_mul(RationalMatrix::identity(3), m), m);
}

TEST(MatMul, AllOnesProduct) {
  EXPECT_EQ(mat_mul(RationalMatrix::ones(2, 3), RationalMatrix::ones(3, 2)), RationalMatrix::ones(2, 2) * R(3));
}

TEST(MatMul, TwoByTwoAtHalf) {
  const Rational q = R(1, 2);
  const RationalMatrix b = RationalMatrix::from_rows({{1, -q}, {-q, 1}});
  EXPECT_EQ(mat_mul(two_by_two(q), b), RationalMatrix::identity(2) * R(3, 4));
}

TEST(MatMul, ShapeMismatchThrows) {
  try {
    (void)mat_mul(RationalMatrix::ones(2, 3), RationalMatrix::ones(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(MatEqual, Basics) {
  EXPECT_TRUE(mat_equal(RationalMatrix::identity(2), RationalMatrix::identity(2)));
  EXPECT_FALSE(mat_equal(RationalMatrix::identity(2), RationalMatrix::ones(2, 2)));
  EXPECT_FALSE(mat_equal(RationalMatrix::identity(2), RationalMatrix::identity(3)));
  const auto miss = first_mismatch(RationalMatrix::identity(2), RationalMatrix::ones(2, 2));
  ASSERT_TRUE(miss.has_value());
  EXPECT_EQ(miss->row, 0u);
  EXPECT_EQ(miss->col, 1u);
  EXPECT_EQ(miss->expected, R(0));
  EXPECT_EQ(miss->actual, R(1));
}

TEST(OracleDet, FixedValues) {
  EXPECT_EQ(oracle_det(RationalMatrix::identity(5)), R(1));
  EXPECT_EQ(oracle_det(two_by_two(R(1, 2))), R(3, 4));
  EXPECT_EQ(oracle_det(exponential_matrix(testing::complete_bipartite(2, 3), R(1, 3))), R(28672, 59049));
  EXPECT_EQ(oracle_det(RationalMatrix()), R(1));
  EXPECT_EQ(oracle_det(RationalMatrix::ones(3, 3)), R(0));
  EXPECT_EQ(oracle_det(RationalMatrix::from_rows({{0, 1}, {1, 0}})), R(-1));
  EXPECT_THROW((void)oracle_det(RationalMatrix::ones(2, 3)), Error);
}

TEST(OracleInverse, FixedValues) {
  EXPECT_EQ(oracle_inverse(RationalMatrix::identity(4)), RationalMatrix::identity(4));
  const std::vector<Rational> d{2, 3};
  const std::vector<Rational> dinv{R(1, 2), R(1, 3)};
  EXPECT_EQ(oracle_inverse(RationalMatrix::diagonal(d)), RationalMatrix::diagonal(dinv));
  const RationalMatrix expected = RationalMatrix::from_rows(
      {{R(5, 3), R(-2, 3), R(-2, 3)}, {R(-2, 3), R(4, 3), 0}, {R(-2, 3), 0, R(4, 3)}});
  EXPECT_EQ(oracle_inverse(exponential_matrix(testing::complete_bipartite(1, 2), R(1, 2))), expected);
}

TEST(OracleInverse, SingularThrows) {
  try {
    (void)oracle_inverse(RationalMatrix::ones(3, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularMatrix);
  }
}

TEST(OracleAdjugateSum, FixedValues) {
  EXPECT_EQ(oracle_adjugate_sum(two_by_two(R(1, 2))), R(1));
  EXPECT_EQ(oracle_adjugate_sum(RationalMatrix::identity(3)), R(3));
  // K_{2,2} at q = 1/2: (1 - q^2)^3 (2q(q-1) 4 / (1 - q^2) + 4).
  EXPECT_EQ(oracle_adjugate_sum(exponential_matrix(testing::complete_bipartite(2, 2), R(1, 2))), R(9, 16));
  EXPECT_EQ(oracle_adjugate_sum(exponential_matrix(testing::path(3), R(1, 2))), R(15, 16));
  // adj(J_2) = [[1,-1],[-1,1]].
  EXPECT_EQ(oracle_adjugate_sum(RationalMatrix::ones(2, 2)), R(0));
  // Rank n-1 matrix with a nonzero adjugate sum.
  EXPECT_EQ(oracle_adjugate_sum(RationalMatrix::from_rows({{1, 0}, {0, 0}})), R(1));
}

TEST(OracleProperty, BareissMatchesCofactorExpansion) {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      const RationalMatrix m = testing::random_matrix(rng, n, n, trial % 3 == 0 ? 0.6 : 0.15);
      EXPECT_EQ(oracle_det(m), testing::cofactor_det(m)) << to_string(m);
    }
  }
}

TEST(OracleProperty, InverseIsTwoSided) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const RationalMatrix m = testing::random_matrix(rng, n, n);
    if (oracle_det(m).is_zero()) continue;
    const RationalMatrix inv = oracle_inverse(m);
    EXPECT_EQ(mat_mul(m, inv), RationalMatrix::identity(n));
    EXPECT_EQ(mat_mul(inv, m), RationalMatrix::identity(n));
    for (const Rational& e : inv.entries()) EXPECT_TRUE(is_canonical(e));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(OracleProperty, AdjugateRoutesAgree) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RationalMatrix m = testing::random_matrix(rng, n, n, 0.3);
    if (trial % 4 == 0 && n > 1) {
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * R(2);  // force singular
    }
    const Rational minors = adjugate_sum_by_minors(m);
    EXPECT_EQ(adjugate_sum_by_row_expansion(m), minors);
    EXPECT_EQ(oracle_adjugate_sum(m), minors);
    if (!oracle_det(m).is_zero()) EXPECT_EQ(adjugate_sum_by_inverse(m), minors);
  }
}

TEST(OracleProperty, AdjugateRoutesAgreeOnSingularExponentialMatrices) {
  // K_{3,3} at q = 1/2 and K_{2,2} at q = 1 have a vanishing block factor.
  for (const auto& [s, t, q] : {std::tuple{3u, 3u, R(1, 2)}, std::tuple{2u, 2u, R(1)}, std::tuple{2u, 3u, R(-1)}}) {
    const RationalMatrix f = exponential_matrix(testing::complete_bipartite(s, t), q);
    EXPECT_EQ(oracle_det(f), R(0));
    EXPECT_EQ(adjugate_sum_by_row_expansion(f), adjugate_sum_by_minors(f));
  }
}

}  // namespace
}  // namespace expdist
