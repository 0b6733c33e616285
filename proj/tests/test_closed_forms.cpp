#include <gtest/gtest.h>

#include <random>

#include "expdist/closed_forms.hpp"
#include "expdist/edm.hpp"
#include "expdist/error.hpp"
#include "expdist/oracle.hpp"
#include "support.hpp"

namespace expdist {
namespace {

using testing::R;

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

TEST(AIBJ, Determinant) {
  EXPECT_EQ(aibj_det({1, 0, 5}), R(1));
  EXPECT_EQ(aibj_det({1, 1, 3}), R(4));
  EXPECT_EQ(oracle_det(AIBJForm{1, 1, 3}.materialize()), R(4));
  const AIBJForm lf{R(3, 4), R(3, 16), 4};
  EXPECT_EQ(aibj_det(lf), oracle_det(lf.materialize()));
  EXPECT_EQ(aibj_det({R(5), R(-2), 0}), R(1));
}

TEST(AIBJ, Inverse) {
  const AIBJForm id = aibj_inverse({1, 0, 4});
  EXPECT_EQ(id.a, R(1));
  EXPECT_EQ(id.b, R(0));
  const AIBJForm inv = aibj_inverse({1, 1, 3});
  EXPECT_EQ(inv.a, R(1));
  EXPECT_EQ(inv.b, R(-1, 4));
  EXPECT_EQ(mat_mul(inv.materialize(), AIBJForm{1, 1, 3}.materialize()), RationalMatrix::identity(3));
  EXPECT_EQ(kind_of([] { (void)aibj_inverse({1, R(-1, 3), 3}); }), ErrorKind::SingularForm);
  EXPECT_EQ(kind_of([] { (void)aibj_inverse({0, 1, 3}); }), ErrorKind::SingularForm);
}

TEST(Schur, Examples) {
  RationalMatrix bd = RationalMatrix::zeros(4, 4);
  bd.set_block(0, 0, RationalMatrix::from_rows({{2, 1}, {1, 1}}));
  const RationalMatrix lower = RationalMatrix::from_rows({{R(3, 2), 7}, {R(-1, 5), 4}});
  bd.set_block(2, 2, lower);
  EXPECT_EQ(schur_complement(bd, 2), lower);

  EXPECT_EQ(schur_complement(RationalMatrix::from_rows({{2, 1}, {1, 1}}), 1), RationalMatrix::from_rows({{R(1, 2)}}));

  const Rational q = R(1, 2);
  const std::size_t s = 3;
  const std::size_t t = 2;
  const Rational q2 = q * q;
  const Rational one_minus = Rational(1) - q2;
  const Rational coeff = q2 * one_minus * Rational(s - 1) / (q2 * Rational(s - 1) + 1);
  const RationalMatrix expected = RationalMatrix::identity(t) * one_minus - RationalMatrix::ones(t, t) * coeff;
  EXPECT_EQ(schur_complement(exponential_matrix(testing::complete_bipartite(s, t), q), s), expected);

  EXPECT_EQ(kind_of([] { (void)schur_complement(RationalMatrix::ones(3, 3), 2); }), ErrorKind::SingularLeadingBlock);
}

TEST(SchurProperty, DeterminantFactorizes) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const std::size_t k = 1 + trial % (n - 1);
    const RationalMatrix m = testing::random_matrix(rng, n, n);
    const Rational lead = oracle_det(m.block(0, 0, k, k));
    if (lead.is_zero()) continue;
    EXPECT_EQ(oracle_det(m), lead * oracle_det(schur_complement(m, k)));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(CompleteBipartite, DeterminantExamples) {
  EXPECT_EQ(det_complete_bipartite(1, 1, R(1, 2)), R(3, 4));
  EXPECT_EQ(det_complete_bipartite(2, 3, R(1, 3)), R(28672, 59049));
  EXPECT_EQ(det_complete_bipartite(3, 4, R(1)), R(0));
  EXPECT_EQ(det_complete_bipartite(3, 4, R(-1)), R(0));
}

TEST(CompleteBipartite, InverseExamples) {
  const RationalMatrix expected = RationalMatrix::from_rows(
      {{R(5, 3), R(-2, 3), R(-2, 3)}, {R(-2, 3), R(4, 3), 0}, {R(-2, 3), 0, R(4, 3)}});
  EXPECT_EQ(inverse_complete_bipartite(1, 2, R(1, 2)), expected);
  EXPECT_EQ(kind_of([] { (void)inverse_complete_bipartite(2, 2, R(1)); }), ErrorKind::SingularParameter);
  EXPECT_EQ(kind_of([] { (void)inverse_complete_bipartite(3, 3, R(1, 2)); }), ErrorKind::SingularParameter);
}

TEST(CompleteBipartite, CofactorSumExamples) {
  EXPECT_EQ(cofsum_complete_bipartite(1, 1, R(1, 2)), R(1));
  EXPECT_EQ(cofsum_complete_bipartite(1, 1, R(2, 5)), R(6, 5));
  EXPECT_EQ(cofsum_complete_bipartite(2, 2, R(1, 2)), R(9, 16));
  for (std::size_t s = 1; s <= 4; ++s) {
    for (std::size_t t = 1; t <= 4; ++t) {
      for (const Rational& q : {R(1), R(-1)}) {
        const RationalMatrix f = exponential_matrix(testing::complete_bipartite(s, t), q);
        EXPECT_EQ(cofsum_complete_bipartite(s, t, q), oracle_adjugate_sum(f)) << s << "," << t << " q=" << q;
      }
    }
  }
}

TEST(CompleteBipartite, MatchesGeneralFormsAndIsSymmetric) {
  for (std::size_t s = 1; s <= 5; ++s) {
    for (std::size_t t = 1; t <= 5; ++t) {
      const BiBlockGraph g = testing::complete_bipartite(s, t);
      for (const Rational& q : testing::suite_q_list()) {
        EXPECT_EQ(det_complete_bipartite(s, t, q), det_bi_block(g, q));
        EXPECT_EQ(det_complete_bipartite(s, t, q), det_complete_bipartite(t, s, q));
        EXPECT_EQ(cofsum_complete_bipartite(s, t, q), cofsum_bi_block(g, q));
        EXPECT_EQ(cofsum_complete_bipartite(s, t, q), cofsum_complete_bipartite(t, s, q));
        if (singularity_profile(g, q).clean()) {
          EXPECT_EQ(inverse_complete_bipartite(s, t, q), inverse_bi_block(build_bundle(g, q)));
        }
      }
    }
  }
}

TEST(BiBlock, PathExamples) {
  const BiBlockGraph p3 = testing::path(3);
  const Rational q = R(1, 2);
  EXPECT_EQ(det_bi_block(p3, q), R(9, 16));
  EXPECT_EQ(oracle_det(exponential_matrix(p3, q)), R(9, 16));
  EXPECT_EQ(inverse_bi_block(build_bundle(p3, q)), oracle_inverse(exponential_matrix(p3, q)));
  EXPECT_EQ(cofsum_bi_block(p3, q), R(15, 16));
  EXPECT_EQ(cofsum_bi_block(p3, q, CofactorForm::Stated), R(15, 16));
  for (std::size_t n = 2; n <= 9; ++n) {
    const BiBlockGraph t = testing::random_tree(n, n);
    EXPECT_EQ(det_bi_block(t, R(2, 5)), (Rational(1) - R(4, 25)).pow(static_cast<unsigned>(n - 1)));
  }
}

TEST(BiBlock, Guards) {
  const BiBlockGraph k22 = testing::complete_bipartite(2, 2);
  EXPECT_EQ(kind_of([&] { (void)det_bi_block(k22, R(0)); }), ErrorKind::ZeroQ);
  EXPECT_EQ(det_bi_block(k22, R(1)), R(0));
  EXPECT_EQ(kind_of([&] { (void)cofsum_bi_block(k22, R(1), CofactorForm::Stated); }), ErrorKind::SingularParameter);
  EXPECT_EQ(cofsum_bi_block(k22, R(1)), oracle_adjugate_sum(exponential_matrix(k22, R(1))));
  EXPECT_EQ(kind_of([&] { (void)leaf_block_triangularize(k22, R(1, 2)); }), ErrorKind::NotEnoughBlocks);
  EXPECT_EQ(kind_of([&] { (void)e_identity_check(k22, R(1, 2)); }), ErrorKind::NotEnoughBlocks);
}

TEST(BiBlock, RandomGraphsAgreeWithOracle) {
  const BiBlockGraph g3 = random_bi_block(3, 3, 4, 4);
  EXPECT_EQ(det_bi_block(g3, R(2, 5)), oracle_det(exponential_matrix(g3, R(2, 5))));

  const BiBlockGraph g4 = random_bi_block(4, 4, 4, 4);
  if (singularity_profile(g4, R(1, 3)).clean()) {
    const EdmBundle b = build_bundle(g4, R(1, 3));
    EXPECT_EQ(mat_mul(b.F, inverse_bi_block(b)), RationalMatrix::identity(g4.vertex_count()));
  }

  const BiBlockGraph g5 = random_bi_block(5, 5, 4, 4);
  EXPECT_EQ(cofsum_bi_block(g5, R(3, 7)), oracle_adjugate_sum(exponential_matrix(g5, R(3, 7))));
}

TEST(LeafBlock, PathDecomposition) {
  const Rational q = R(1, 2);
  const LeafBlockDecomposition d = leaf_block_triangularize(testing::path(3), q);
  EXPECT_TRUE(d.holds());
  EXPECT_EQ(d.leaf_block, 1u);
  EXPECT_EQ(d.cut_vertex, 1u);
  EXPECT_EQ(d.s, 1u);
  EXPECT_EQ(d.t, 1u);
  EXPECT_EQ(d.diag_blocks[0], exponential_matrix(testing::path(2), q));
  EXPECT_EQ(d.diag_blocks[1].rows(), 0u);
  EXPECT_EQ(d.diag_blocks[2], RationalMatrix::identity(1) * R(3, 4));
  EXPECT_EQ(oracle_det(d.LF), oracle_det(exponential_matrix(testing::path(3), q)));
}

TEST(LeafBlock, SquareLeafHasZeroLowerBlocks) {
  const BiBlockGraph g = build_graph({{2, 3}, {2, 2}}, {{3, Side::X}});
  const LeafBlockDecomposition d = leaf_block_triangularize(g, R(1, 2));
  EXPECT_TRUE(d.holds());
  const std::size_t h = d.parent_size;
  const std::size_t n = g.vertex_count();
  EXPECT_TRUE(d.LF.block(h, 0, n - h, h).is_zero());
  EXPECT_TRUE(d.LF.block(h + d.s - 1, h, d.t, d.s - 1).is_zero());
  Rational product = 1;
  for (const auto& blk : d.diag_blocks) product *= oracle_det(blk);
  EXPECT_EQ(product, oracle_det(exponential_matrix(g, R(1, 2))));
  EXPECT_EQ(aibj_det(d.middle_form), oracle_det(d.diag_blocks[1]));
  EXPECT_EQ(aibj_det(d.last_form), oracle_det(d.diag_blocks[2]));
}

TEST(LeafBlock, IdentitiesOnPathPlusLargeLeaf) {
  const BiBlockGraph g = build_graph({{1, 1}, {1, 1}, {3, 2}}, {{1, Side::Y}, {2, Side::X}});
  EXPECT_TRUE(leaf_identities(g, R(1, 2)).all());
  EXPECT_TRUE(e_identity_check(g, R(3, 7)));
}

class LeafProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(LeafProperty, DecompositionAndIdentitiesHold) {
  const std::uint64_t seed = GetParam();
  const BiBlockGraph g = random_bi_block(seed + 300, 2 + seed % 5, 4, 4);
  for (const Rational& q : {R(1, 2), R(5, 4), R(-2, 3), R(1), R(-1)}) {
    const LeafBlockDecomposition d = leaf_block_triangularize(g, q);
    EXPECT_TRUE(d.block_form_matches);
    EXPECT_TRUE(d.lower_blocks_zero);
    EXPECT_TRUE(d.diagonal_blocks_match);
    EXPECT_EQ(d.leaf_block, g.block_count() - 1);
    EXPECT_TRUE(e_identity_check(g, q));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LeafProperty, ::testing::Range<std::uint64_t>(0, 25));

}  // namespace
}  // namespace expdist
