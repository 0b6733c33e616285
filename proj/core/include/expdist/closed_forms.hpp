#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "expdist/edm.hpp"
#include "expdist/graph.hpp"
#include "expdist/matrix.hpp"
#include "expdist/rational.hpp"

namespace expdist {

/// a I_n + b J_n.
struct AIBJForm {
  Rational a;
  Rational b;
  std::size_t n = 0;

  RationalMatrix materialize() const;
};

/// a^(n-1) (a + n b). The empty form (n = 0) has determinant 1.
Rational aibj_det(const AIBJForm& f);

/// (1/a)(I - b/(a + n b) J), returned in a I + b J form. Throws SingularForm
/// when a = 0 or a + n b = 0.
AIBJForm aibj_inverse(const AIBJForm& f);

/// M22 - M21 M11^-1 M12 for the split after the leading k x k block.
/// Throws SingularLeadingBlock or DimensionMismatch.
RationalMatrix schur_complement(const RationalMatrix& m, std::size_t k);

// Determinants. Both are evaluated as polynomials in q, so q = +-1 and
// vanishing block factors are fine; only q = 0 is rejected (ZeroQ).
Rational det_complete_bipartite(std::size_t s, std::size_t t, const Rational& q);
Rational det_bi_block(const BiBlockGraph& g, const Rational& q);

/// Inverse of F(K_{s,t}) with X (size s) ordered before Y (size t).
/// Throws SingularParameter when q is 0 or +-1 or q^2 (s-1)(t-1) = 1.
RationalMatrix inverse_complete_bipartite(std::size_t s, std::size_t t, const Rational& q);

/// (I - qA + q^2 B + q^2 diag(mu)) / (1 - q^2). Throws SingularParameter when q = +-1.
RationalMatrix inverse_bi_block(const EdmBundle& bundle);

enum class CofactorForm {
  /// Prefactor distributed into the bracket; defined for every q != 0.
  Cancelled,
  /// Prefactor times bracket as written, with the divisions; needs q != +-1
  /// and non-vanishing block factors.
  Stated,
};

/// (1 - q^2)^(s+t-2) [2q(q-1)st + (s+t)(1 - q^2)]. Throws ZeroQ.
Rational cofsum_complete_bipartite(std::size_t s, std::size_t t, const Rational& q);

/// Sum of all cofactors of F. Throws ZeroQ; with CofactorForm::Stated also
/// SingularParameter at excluded points.
Rational cofsum_bi_block(const BiBlockGraph& g, const Rational& q,
                         CofactorForm form = CofactorForm::Cancelled);

/// Elimination of the last-attached (leaf) block. F is reordered as
/// [H without cut vertex, cut vertex, remaining cut-side vertices of the
/// leaf (s - 1), other side of the leaf (t)], where H is the graph spanned by
/// the earlier blocks, so that the cut vertex is the last vertex of H.
struct LeafBlockDecomposition {
  std::size_t leaf_block = 0;
  VertexId cut_vertex = 0;
  Side cut_side = Side::X;
  std::size_t s = 0;            // size of the leaf part holding the cut vertex
  std::size_t t = 0;            // size of the other leaf part
  std::size_t parent_size = 0;  // vertex count of H
  std::vector<VertexId> order;  // row i of permuted_F is vertex order[i]

  RationalMatrix permuted_F;
  RationalMatrix L;
  RationalMatrix LF;
  /// Diagonal blocks of LF as computed: H x H, (s-1) x (s-1), t x t.
  std::array<RationalMatrix, 3> diag_blocks;
  /// Predicted middle and last diagonal blocks.
  AIBJForm middle_form;
  AIBJForm last_form;

  bool block_form_matches = false;     // permuted_F equals the partition built from F(H)
  bool lower_blocks_zero = false;      // the three blocks below the diagonal vanish
  bool diagonal_blocks_match = false;  // diagonal blocks equal F(H) and the predicted forms

  bool holds() const noexcept {
    return block_form_matches && lower_blocks_zero && diagonal_blocks_match;
  }
};

/// Throws NotEnoughBlocks when the graph has a single block, ZeroQ for q = 0.
LeafBlockDecomposition leaf_block_triangularize(const BiBlockGraph& g, const Rational& q);

/// The ten identities between F(H) and the indicator matrices E1 (last row of
/// ones, s-1 columns), E2 (last row of ones, t columns) and E_mm, grouped as
/// (a)..(e), each group holding the pair of identities.
struct LeafIdentities {
  std::array<std::array<bool, 2>, 5> groups{};

  bool all() const noexcept {
    for (const auto& g : groups)
      if (!g[0] || !g[1]) return false;
    return true;
  }
};

LeafIdentities leaf_identities(const BiBlockGraph& g, const Rational& q);

/// True when every identity of `leaf_identities` holds. Throws NotEnoughBlocks.
bool e_identity_check(const BiBlockGraph& g, const Rational& q);

}  // namespace expdist
