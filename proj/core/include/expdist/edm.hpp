#pragma once

#include <cstddef>
#include <vector>

#include "expdist/graph.hpp"
#include "expdist/matrix.hpp"
#include "expdist/rational.hpp"

namespace expdist {

/// Which of the parameter guards fail for a (graph, q) pair.
struct SingularityProfile {
  bool q_is_zero = false;
  bool q_is_pm1 = false;
  /// Blocks i with 1 - q^2 (m_i - 1)(n_i - 1) = 0.
  std::vector<std::size_t> vanishing_blocks;

  bool clean() const noexcept { return !q_is_zero && !q_is_pm1 && vanishing_blocks.empty(); }
};

/// The exponential distance matrix and its auxiliary objects for one
/// (graph, q) pair.
struct EdmBundle {
  Rational q;
  RationalMatrix F;
  RationalMatrix A;
  RationalMatrix B;
  RationalVector mu;
  RationalVector x;
  RationalMatrix qlap;
};

SingularityProfile singularity_profile(const BiBlockGraph& g, const Rational& q);

/// 1 - q^2 (m - 1)(n - 1), the per-block factor that appears in every closed form.
Rational block_factor(const BlockSpec& b, const Rational& q);

/// F(u, v) = q^d(u, v). Throws ZeroQ.
RationalMatrix exponential_matrix(const BiBlockGraph& g, const Rational& q);

// The remaining constructors throw VanishingBlockDenominator when some block
// factor is zero.

/// Weighted adjacency: 1 / (1 - q^2 (m_i - 1)(n_i - 1)) on the edges of block i.
RationalMatrix aux_matrix_A(const BiBlockGraph& g, const Rational& q);
/// Weighted complement inside each block: (n_i - 1) / factor between distinct
/// X_i vertices, (m_i - 1) / factor between distinct Y_i vertices.
RationalMatrix aux_matrix_B(const BiBlockGraph& g, const Rational& q);
/// Per-vertex sum of block-side weights plus (block index - 1).
RationalVector mu_vector(const BiBlockGraph& g, const Rational& q);
/// Per-vertex diagonal of the q-Laplacian, evaluated from its own definition
/// (not from mu): sum of (1 - q^2 (m-2)(n-1)) / factor over X memberships,
/// (1 - q^2 (m-1)(n-2)) / factor over Y memberships, minus (1 - q^2)(k - 1).
RationalVector x_vector(const BiBlockGraph& g, const Rational& q);
/// diag(x) + q^2 B - q A.
RationalMatrix q_laplacian(const BiBlockGraph& g, const Rational& q);

/// Throws ZeroQ or VanishingBlockDenominator.
EdmBundle build_bundle(const BiBlockGraph& g, const Rational& q);

}  // namespace expdist
