#include "expdist/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "expdist/error.hpp"
#include "expdist/oracle.hpp"

namespace expdist {

namespace {

Rational as_rational(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

void require_nonzero_q(const Rational& q) {
  if (q.is_zero()) throw Error(ErrorKind::ZeroQ, "q must be nonzero");
}

bool is_pm1(const Rational& q) { return q == Rational(1) || q == Rational(-1); }

RationalMatrix last_row_ones(std::size_t rows, std::size_t cols) {
  RationalMatrix e(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) e(rows - 1, j) = 1;
  return e;
}

/// Shared setup for the leaf-block lemmas: the reordered F and the indicator
/// matrices for the last-attached block.
struct LeafFrame {
  std::size_t leaf = 0;
  VertexId cut = 0;
  Side side = Side::X;
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t parent_size = 0;
  std::vector<VertexId> order;
  RationalMatrix F;
  RationalMatrix F_hat;
  RationalMatrix E1;
  RationalMatrix E2;
  RationalMatrix Emm;
};

LeafFrame make_leaf_frame(const BiBlockGraph& g, const Rational& q) {
  require_nonzero_q(q);
  if (g.block_count() < 2) throw Error(ErrorKind::NotEnoughBlocks, "leaf elimination needs r >= 2");
  LeafFrame f;
  f.leaf = g.block_count() - 1;
  const Attachment& att = g.attachments().back();
  f.cut = att.cut_vertex;
  f.side = att.side;
  const BlockSpec& leaf = g.blocks()[f.leaf];
  f.s = leaf.side_size(f.side);
  f.t = leaf.side_size(opposite(f.side));
  f.parent_size = g.vertex_count() - (f.s + f.t - 1);

  for (VertexId v = 0; v < f.parent_size; ++v)
    if (v != f.cut) f.order.push_back(v);
  f.order.push_back(f.cut);
  const auto same = g.block_part(f.leaf, f.side);
  f.order.insert(f.order.end(), same.begin() + 1, same.end());  // offset 0 is the cut vertex
  const auto other = g.block_part(f.leaf, opposite(f.side));
  f.order.insert(f.order.end(), other.begin(), other.end());

  f.F = exponential_matrix(g, q).permuted(f.order);
  f.F_hat = f.F.block(0, 0, f.parent_size, f.parent_size);
  f.E1 = last_row_ones(f.parent_size, f.s - 1);
  f.E2 = last_row_ones(f.parent_size, f.t);
  f.Emm = RationalMatrix(f.parent_size, f.parent_size);
  f.Emm(f.parent_size - 1, f.parent_size - 1) = 1;
  return f;
}

}  // namespace

RationalMatrix AIBJForm::materialize() const {
  return a * RationalMatrix::identity(n) + b * RationalMatrix::ones(n, n);
}

Rational aibj_det(const AIBJForm& f) {
  if (f.n == 0) return 1;
  return f.a.pow(static_cast<unsigned>(f.n - 1)) * (f.a + as_rational(f.n) * f.b);
}

AIBJForm aibj_inverse(const AIBJForm& f) {
  const Rational trace_part = f.a + as_rational(f.n) * f.b;
  if (f.a.is_zero() || trace_part.is_zero()) {
    throw Error(ErrorKind::SingularForm, "aI + bJ with a = " + f.a.to_string() +
                                             ", a + nb = " + trace_part.to_string());
  }
  return {f.a.inverse(), -f.b / (f.a * trace_part), f.n};
}

RationalMatrix schur_complement(const RationalMatrix& m, std::size_t k) {
  if (!m.is_square() || k > m.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "Schur complement split outside the matrix");
  }
  const std::size_t rest = m.rows() - k;
  const RationalMatrix m11 = m.block(0, 0, k, k);
  RationalMatrix m11_inv;
  try {
    m11_inv = oracle_inverse(m11);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularMatrix) throw;
    throw Error(ErrorKind::SingularLeadingBlock, "leading block is singular");
  }
  const RationalMatrix m12 = m.block(0, k, k, rest);
  const RationalMatrix m21 = m.block(k, 0, rest, k);
  return m.block(k, k, rest, rest) - m21 * (m11_inv * m12);
}

Rational det_complete_bipartite(std::size_t s, std::size_t t, const Rational& q) {
  require_nonzero_q(q);
  const Rational q2 = q * q;
  return (Rational(1) - q2).pow(static_cast<unsigned>(s + t - 1)) *
         block_factor(BlockSpec{s, t}, q);
}

Rational det_bi_block(const BiBlockGraph& g, const Rational& q) {
  require_nonzero_q(q);
  Rational det = (Rational(1) - q * q).pow(static_cast<unsigned>(g.vertex_count() - 1));
  for (const BlockSpec& b : g.blocks()) det *= block_factor(b, q);
  return det;
}

RationalMatrix inverse_complete_bipartite(std::size_t s, std::size_t t, const Rational& q) {
  const Rational factor = block_factor(BlockSpec{s, t}, q);
  if (q.is_zero() || is_pm1(q) || factor.is_zero()) {
    throw Error(ErrorKind::SingularParameter,
                "K_{" + std::to_string(s) + "," + std::to_string(t) + "} at q = " + q.to_string());
  }
  const Rational one_minus_q2 = Rational(1) - q * q;
  const Rational scale = q / (one_minus_q2 * factor);
  RationalMatrix core(s + t, s + t);
  core.set_block(0, 0, (q * as_rational(t - 1)) * RationalMatrix::ones(s, s));
  core.set_block(0, s, Rational(-1) * RationalMatrix::ones(s, t));
  core.set_block(s, 0, Rational(-1) * RationalMatrix::ones(t, s));
  core.set_block(s, s, (q * as_rational(s - 1)) * RationalMatrix::ones(t, t));
  return scale * core + one_minus_q2.inverse() * RationalMatrix::identity(s + t);
}

RationalMatrix inverse_bi_block(const EdmBundle& bundle) {
  const Rational& q = bundle.q;
  if (q.is_zero() || is_pm1(q)) {
    throw Error(ErrorKind::SingularParameter, "inverse formula needs q != 0, +-1; got " + q.to_string());
  }
  const Rational q2 = q * q;
  const std::size_t n = bundle.F.rows();
  RationalMatrix inv = RationalMatrix::identity(n) - q * bundle.A + q2 * bundle.B +
                       q2 * RationalMatrix::diagonal(bundle.mu);
  return (Rational(1) - q2).inverse() * std::move(inv);
}

Rational cofsum_complete_bipartite(std::size_t s, std::size_t t, const Rational& q) {
  require_nonzero_q(q);
  const Rational one_minus_q2 = Rational(1) - q * q;
  const Rational st = as_rational(s * t);
  return one_minus_q2.pow(static_cast<unsigned>(s + t - 2)) *
         (Rational(2) * q * (q - Rational(1)) * st + as_rational(s + t) * one_minus_q2);
}

Rational cofsum_bi_block(const BiBlockGraph& g, const Rational& q, CofactorForm form) {
  require_nonzero_q(q);
  const Rational one_minus_q2 = Rational(1) - q * q;
  const auto n = static_cast<unsigned>(g.vertex_count());
  const std::size_t r = g.block_count();
  std::vector<Rational> factors;
  factors.reserve(r);
  for (const BlockSpec& b : g.blocks()) factors.push_back(block_factor(b, q));

  if (form == CofactorForm::Stated) {
    const bool vanishing =
        std::any_of(factors.begin(), factors.end(), [](const Rational& f) { return f.is_zero(); });
    if (is_pm1(q) || vanishing) {
      throw Error(ErrorKind::SingularParameter, "stated cofactor form undefined at q = " + q.to_string());
    }
    Rational prefactor = one_minus_q2.pow(n - 1);
    Rational bracket = -as_rational(r - 1);
    for (std::size_t i = 0; i < r; ++i) {
      const BlockSpec& b = g.blocks()[i];
      prefactor *= factors[i];
      bracket += Rational(2) * q * (q - Rational(1)) * as_rational(b.m * b.n) /
                     (one_minus_q2 * factors[i]) +
                 as_rational(b.size()) / factors[i];
    }
    return prefactor * bracket;
  }

  // Every block has two vertices, so n >= 2 and (1 - q^2)^(n-2) is a polynomial.
  Rational product = 1;
  for (const Rational& f : factors) product *= f;
  Rational total = -as_rational(r - 1) * one_minus_q2.pow(n - 1) * product;
  const Rational base = one_minus_q2.pow(n - 2);
  for (std::size_t i = 0; i < r; ++i) {
    const BlockSpec& b = g.blocks()[i];
    Rational others = 1;
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others *= factors[j];
    total += base * others *
             (Rational(2) * q * (q - Rational(1)) * as_rational(b.m * b.n) +
              as_rational(b.size()) * one_minus_q2);
  }
  return total;
}

LeafBlockDecomposition leaf_block_triangularize(const BiBlockGraph& g, const Rational& q) {
  LeafFrame f = make_leaf_frame(g, q);
  const std::size_t mh = f.parent_size;
  const std::size_t s1 = f.s - 1;
  const std::size_t t = f.t;
  const Rational q2 = q * q;
  const Rational one_minus_q2 = Rational(1) - q2;
  const Rational shift = q2 * as_rational(s1) + Rational(1);  // q^2 (s-1) + 1 > 0

  LeafBlockDecomposition out;
  out.leaf_block = f.leaf;
  out.cut_vertex = f.cut;
  out.cut_side = f.side;
  out.s = f.s;
  out.t = t;
  out.parent_size = mh;
  out.order = f.order;

  // Partition predicted from F(H) alone.
  RationalMatrix expected_F(mh + s1 + t, mh + s1 + t);
  expected_F.set_block(0, 0, f.F_hat);
  expected_F.set_block(0, mh, q2 * (f.F_hat * f.E1));
  expected_F.set_block(0, mh + s1, q * (f.F_hat * f.E2));
  expected_F.set_block(mh, 0, q2 * (f.E1.transpose() * f.F_hat));
  expected_F.set_block(mh, mh, AIBJForm{one_minus_q2, q2, s1}.materialize());
  expected_F.set_block(mh, mh + s1, q * RationalMatrix::ones(s1, t));
  expected_F.set_block(mh + s1, 0, q * (f.E2.transpose() * f.F_hat));
  expected_F.set_block(mh + s1, mh, q * RationalMatrix::ones(t, s1));
  expected_F.set_block(mh + s1, mh + s1, AIBJForm{one_minus_q2, q2, t}.materialize());
  out.block_form_matches = expected_F == f.F;

  const RationalMatrix J_ts = RationalMatrix::ones(t, s1);
  RationalMatrix L = RationalMatrix::identity(mh + s1 + t);
  L.set_block(mh, 0, -q2 * f.E1.transpose());
  L.set_block(mh + s1, 0,
              -q * f.E2.transpose() + (q * q2 / shift) * (J_ts * f.E1.transpose()));
  L.set_block(mh + s1, mh, (-q / shift) * J_ts);
  out.L = std::move(L);
  out.LF = out.L * f.F;

  out.lower_blocks_zero = out.LF.block(mh, 0, s1, mh).is_zero() &&
                          out.LF.block(mh + s1, 0, t, mh).is_zero() &&
                          out.LF.block(mh + s1, mh, t, s1).is_zero();

  out.diag_blocks = {out.LF.block(0, 0, mh, mh), out.LF.block(mh, mh, s1, s1),
                     out.LF.block(mh + s1, mh + s1, t, t)};
  out.middle_form = AIBJForm{one_minus_q2, one_minus_q2 * q2, s1};
  out.last_form = AIBJForm{one_minus_q2, q2 * (q2 - Rational(1)) * as_rational(s1) / shift, t};
  out.diagonal_blocks_match = out.diag_blocks[0] == f.F_hat &&
                              out.diag_blocks[1] == out.middle_form.materialize() &&
                              out.diag_blocks[2] == out.last_form.materialize();
  out.permuted_F = std::move(f.F);
  return out;
}

LeafIdentities leaf_identities(const BiBlockGraph& g, const Rational& q) {
  const LeafFrame f = make_leaf_frame(g, q);
  const std::size_t s1 = f.s - 1;
  const std::size_t t = f.t;
  const RationalMatrix E1t = f.E1.transpose();
  const RationalMatrix E2t = f.E2.transpose();
  const Rational s1r = as_rational(s1);
  const Rational tr = as_rational(t);
  using M = RationalMatrix;

  LeafIdentities out;
  out.groups[0] = {E1t * f.F_hat * f.E2 == M::ones(s1, t), E2t * f.F_hat * f.E1 == M::ones(t, s1)};
  out.groups[1] = {E1t * f.F_hat * f.E1 == M::ones(s1, s1), E2t * f.F_hat * f.E2 == M::ones(t, t)};
  out.groups[2] = {f.E1 * M::ones(s1, s1) == s1r * f.E1, f.E2 * M::ones(t, t) == tr * f.E2};
  out.groups[3] = {f.E1 * M::ones(s1, t) == s1r * f.E2, f.E2 * M::ones(t, s1) == tr * f.E1};
  out.groups[4] = {f.E1 * E1t == s1r * f.Emm, f.E2 * E2t == tr * f.Emm};
  return out;
}

bool e_identity_check(const BiBlockGraph& g, const Rational& q) {
  return leaf_identities(g, q).all();
}

}  // namespace expdist
