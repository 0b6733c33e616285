#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "expdist/graph.hpp"
#include "expdist/matrix.hpp"
#include "expdist/rational.hpp"

namespace expdist::testing {

inline Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

inline BiBlockGraph complete_bipartite(std::size_t s, std::size_t t) { return build_graph({{s, t}}, {}); }

/// P_n as a chain of K_{1,1} blocks; vertex i sits at distance i from vertex 0.
inline BiBlockGraph path(std::size_t n) {
  std::vector<BlockSpec> blocks(n - 1, BlockSpec{1, 1});
  std::vector<Attachment> att;
  for (std::size_t i = 1; i + 1 < n; ++i) att.push_back({i, Side::Y});
  return build_graph(blocks, att);
}

inline BiBlockGraph random_tree(std::uint64_t seed, std::size_t n) { return random_bi_block(seed, n - 1, 1, 1); }

/// Test-only determinant by Laplace expansion along the first row.
inline Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    const Rational term = m(0, j) * cofactor_det(minor);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Small random rationals; `zero_bias` in [0, 1] is the chance of an exact zero entry.
inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                    double zero_bias = 0.2) {
  std::uniform_int_distribution<std::int64_t> num(-9, 9);
  std::uniform_int_distribution<std::int64_t> den(1, 6);
  std::bernoulli_distribution zero(zero_bias);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? Rational(0) : Rational(num(rng), den(rng));
  }
  return m;
}

/// Distances from the block-by-block rule: a new vertex of block i is one
/// step past the cut vertex when it sits opposite the cut, two steps otherwise.
inline DistanceMatrix recursive_distances(const BiBlockGraph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  std::vector<VertexId> placed;
  auto in_block = [&](std::size_t b, VertexId u, Side su, VertexId v, Side sv) -> unsigned {
    (void)b;
    if (u == v) return 0;
    return su == sv ? 2 : 1;
  };
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    std::vector<std::pair<VertexId, Side>> members;
    for (Side s : {Side::X, Side::Y}) {
      for (VertexId v : g.block_part(b, s)) members.emplace_back(v, s);
    }
    if (b == 0) {
      for (auto [u, su] : members) {
        for (auto [v, sv] : members) d(u, v) = in_block(b, u, su, v, sv);
        placed.push_back(u);
      }
      continue;
    }
    const Attachment& a = g.attachments()[b - 1];
    const VertexId cut = a.cut_vertex;
    std::vector<std::pair<VertexId, Side>> fresh;
    for (auto m : members) {
      if (m.first != cut) fresh.push_back(m);
    }
    for (auto [v, sv] : fresh) {
      const unsigned step = sv == a.side ? 2 : 1;
      for (VertexId u : placed) {
        d(u, v) = d(u, cut) + step;
        d(v, u) = d(u, v);
      }
      for (auto [w, sw] : fresh) d(v, w) = in_block(b, v, sv, w, sw);
    }
    for (auto [v, sv] : fresh) placed.push_back(v);
  }
  return d;
}

inline std::vector<Rational> suite_q_list() { return {R(1, 2), R(1, 3), R(3, 7), R(5, 4), R(-2, 3)}; }

}  // namespace expdist::testing
