#include "expdist/edm.hpp"

#include <string>

#include "expdist/error.hpp"

namespace expdist {

namespace {

void require_nonzero_q(const Rational& q) {
  if (q.is_zero()) throw Error(ErrorKind::ZeroQ, "q must be nonzero");
}

/// 1 / factor for every block; throws when a factor vanishes.
std::vector<Rational> inverse_factors(const BiBlockGraph& g, const Rational& q) {
  std::vector<Rational> out;
  out.reserve(g.block_count());
  for (std::size_t i = 0; i < g.block_count(); ++i) {
    const Rational f = block_factor(g.blocks()[i], q);
    if (f.is_zero()) {
      throw Error(ErrorKind::VanishingBlockDenominator,
                  "block " + std::to_string(i) + " has 1 - q^2 (m-1)(n-1) = 0 at q = " +
                      q.to_string());
    }
    out.push_back(f.inverse());
  }
  return out;
}

RationalMatrix build_A(const BiBlockGraph& g, const std::vector<Rational>& inv) {
  const std::size_t n = g.vertex_count();
  RationalMatrix a(n, n);
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    for (VertexId x : g.block_part(b, Side::X)) {
      for (VertexId y : g.block_part(b, Side::Y)) {
        a(x, y) = inv[b];
        a(y, x) = inv[b];
      }
    }
  }
  return a;
}

RationalMatrix build_B(const BiBlockGraph& g, const std::vector<Rational>& inv) {
  const std::size_t n = g.vertex_count();
  RationalMatrix out(n, n);
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    const BlockSpec& spec = g.blocks()[b];
    for (Side side : {Side::X, Side::Y}) {
      // X pairs carry (n - 1), Y pairs carry (m - 1).
      const auto weight =
          Rational(static_cast<std::int64_t>(spec.side_size(opposite(side))) - 1) * inv[b];
      const auto part = g.block_part(b, side);
      for (std::size_t i = 0; i < part.size(); ++i) {
        for (std::size_t j = i + 1; j < part.size(); ++j) {
          out(part[i], part[j]) = weight;
          out(part[j], part[i]) = weight;
        }
      }
    }
  }
  return out;
}

RationalVector build_mu(const BiBlockGraph& g, const std::vector<Rational>& inv) {
  RationalVector mu(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto memberships = g.memberships(v);
    Rational acc(static_cast<std::int64_t>(memberships.size()) - 1);
    for (const Membership& mb : memberships) {
      const BlockSpec& spec = g.blocks()[mb.block];
      acc += Rational(static_cast<std::int64_t>(spec.side_size(opposite(mb.side))) - 1) *
             inv[mb.block];
    }
    mu[v] = std::move(acc);
  }
  return mu;
}

RationalVector build_x(const BiBlockGraph& g, const Rational& q, const std::vector<Rational>& inv) {
  const Rational q2 = q * q;
  RationalVector x(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto memberships = g.memberships(v);
    Rational acc = -(Rational(1) - q2) * Rational(static_cast<std::int64_t>(memberships.size()) - 1);
    for (const Membership& mb : memberships) {
      const BlockSpec& spec = g.blocks()[mb.block];
      const auto m = static_cast<std::int64_t>(spec.m);
      const auto n = static_cast<std::int64_t>(spec.n);
      const Rational numerator = mb.side == Side::X ? Rational(1) - q2 * Rational((m - 2) * (n - 1))
                                                    : Rational(1) - q2 * Rational((m - 1) * (n - 2));
      acc += numerator * inv[mb.block];
    }
    x[v] = std::move(acc);
  }
  return x;
}

RationalMatrix compose_qlap(const RationalVector& x, const RationalMatrix& a,
                            const RationalMatrix& b, const Rational& q) {
  return RationalMatrix::diagonal(x) + (q * q) * b - q * a;
}

}  // namespace

Rational block_factor(const BlockSpec& b, const Rational& q) {
  const auto prod = static_cast<std::int64_t>((b.m - 1) * (b.n - 1));
  return Rational(1) - q * q * Rational(prod);
}

SingularityProfile singularity_profile(const BiBlockGraph& g, const Rational& q) {
  SingularityProfile p;
  p.q_is_zero = q.is_zero();
  p.q_is_pm1 = q == Rational(1) || q == Rational(-1);
  for (std::size_t i = 0; i < g.block_count(); ++i) {
    if (block_factor(g.blocks()[i], q).is_zero()) p.vanishing_blocks.push_back(i);
  }
  return p;
}

RationalMatrix exponential_matrix(const BiBlockGraph& g, const Rational& q) {
  require_nonzero_q(q);
  const std::size_t n = g.vertex_count();
  const DistanceMatrix& d = g.distances();
  std::vector<Rational> powers(d.diameter() + 1);
  powers[0] = 1;
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * q;
  RationalMatrix f(n, n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) f(u, v) = powers[d(u, v)];
  return f;
}

RationalMatrix aux_matrix_A(const BiBlockGraph& g, const Rational& q) {
  return build_A(g, inverse_factors(g, q));
}

RationalMatrix aux_matrix_B(const BiBlockGraph& g, const Rational& q) {
  return build_B(g, inverse_factors(g, q));
}

RationalVector mu_vector(const BiBlockGraph& g, const Rational& q) {
  return build_mu(g, inverse_factors(g, q));
}

RationalVector x_vector(const BiBlockGraph& g, const Rational& q) {
  return build_x(g, q, inverse_factors(g, q));
}

RationalMatrix q_laplacian(const BiBlockGraph& g, const Rational& q) {
  const auto inv = inverse_factors(g, q);
  return compose_qlap(build_x(g, q, inv), build_A(g, inv), build_B(g, inv), q);
}

EdmBundle build_bundle(const BiBlockGraph& g, const Rational& q) {
  require_nonzero_q(q);
  const auto inv = inverse_factors(g, q);
  EdmBundle bundle;
  bundle.q = q;
  bundle.F = exponential_matrix(g, q);
  bundle.A = build_A(g, inv);
  bundle.B = build_B(g, inv);
  bundle.mu = build_mu(g, inv);
  bundle.x = build_x(g, q, inv);
  bundle.qlap = compose_qlap(bundle.x, bundle.A, bundle.B, q);
  return bundle;
}

}  // namespace expdist
