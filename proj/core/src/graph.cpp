#include "expdist/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <string>

#include "expdist/error.hpp"

namespace expdist {

namespace {

constexpr unsigned kUnreached = std::numeric_limits<unsigned>::max();

std::size_t part_index(Side s) { return s == Side::X ? 0 : 1; }

}  // namespace

unsigned DistanceMatrix::diameter() const {
  unsigned best = 0;
  for (unsigned d : d_) best = std::max(best, d);
  return best;
}

std::span<const VertexId> BiBlockGraph::block_part(std::size_t block, Side side) const {
  return parts_.at(block).at(part_index(side));
}

VertexId BiBlockGraph::vertex_at(std::size_t block, Side side, std::size_t offset) const {
  return parts_.at(block).at(part_index(side)).at(offset);
}

std::vector<std::pair<VertexId, VertexId>> BiBlockGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < adjacency_.size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool BiBlockGraph::is_tree() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const BlockSpec& b) { return b.m == 1 && b.n == 1; });
}

BiBlockGraph build_graph(std::vector<BlockSpec> blocks, std::vector<Attachment> attachments) {
  if (blocks.empty()) throw Error(ErrorKind::BadBlockSpec, "graph needs at least one block");
  for (const auto& b : blocks) {
    if (b.m == 0 || b.n == 0) throw Error(ErrorKind::BadBlockSpec, "block parts must be non-empty");
  }
  if (attachments.size() + 1 != blocks.size()) {
    throw Error(ErrorKind::BadAttachment, "expected " + std::to_string(blocks.size() - 1) +
                                              " attachments, got " +
                                              std::to_string(attachments.size()));
  }

  BiBlockGraph g;
  g.parts_.resize(blocks.size());
  auto add_vertex = [&g](std::size_t block, Side side) {
    const VertexId id = g.memberships_.size();
    g.memberships_.push_back({Membership{block, side}});
    g.parts_[block][part_index(side)].push_back(id);
    return id;
  };

  for (std::size_t b = 0; b < blocks.size(); ++b) {
    g.parts_[b].resize(2);
    Side cut_side = Side::X;
    if (b > 0) {
      const Attachment& att = attachments[b - 1];
      if (att.cut_vertex >= g.memberships_.size()) {
        throw Error(ErrorKind::BadAttachment,
                    "attachment " + std::to_string(b - 1) + " references vertex " +
                        std::to_string(att.cut_vertex) + " but only " +
                        std::to_string(g.memberships_.size()) + " exist");
      }
      cut_side = att.side;
      g.parts_[b][part_index(cut_side)].push_back(att.cut_vertex);
      g.memberships_[att.cut_vertex].push_back(Membership{b, cut_side});
    }
    for (Side side : {Side::X, Side::Y}) {
      const std::size_t want = blocks[b].side_size(side);
      while (g.parts_[b][part_index(side)].size() < want) add_vertex(b, side);
    }
  }

  g.adjacency_.resize(g.memberships_.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (VertexId x : g.parts_[b][0]) {
      for (VertexId y : g.parts_[b][1]) {
        g.adjacency_[x].push_back(y);
        g.adjacency_[y].push_back(x);
      }
    }
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  g.blocks_ = std::move(blocks);
  g.attachments_ = std::move(attachments);
  g.distances_ = distance_matrix(g);
  return g;
}

DistanceMatrix distance_matrix(const BiBlockGraph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix dist(n);
  std::vector<unsigned> level(n);
  std::deque<VertexId> queue;
  for (VertexId src = 0; src < n; ++src) {
    std::fill(level.begin(), level.end(), kUnreached);
    level[src] = 0;
    queue.assign(1, src);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (VertexId v : g.neighbors(u)) {
        if (level[v] != kUnreached) continue;
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
    for (VertexId v = 0; v < n; ++v) dist(src, v) = level[v];
  }
  return dist;
}

std::size_t block_index(const BiBlockGraph& g, VertexId v) { return g.memberships(v).size(); }

BiBlockGraph random_bi_block(std::uint64_t seed, std::size_t r, std::size_t max_m,
                             std::size_t max_n) {
  if (r == 0 || max_m == 0 || max_n == 0) {
    throw Error(ErrorKind::BadBlockSpec, "generator needs r >= 1 and positive size bounds");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_m(1, max_m);
  std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
  std::bernoulli_distribution pick_side(0.5);

  std::vector<BlockSpec> blocks;
  std::vector<Attachment> attachments;
  std::size_t vertices = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const BlockSpec b{pick_m(rng), pick_n(rng)};
    if (i > 0) {
      std::uniform_int_distribution<VertexId> pick_vertex(0, vertices - 1);
      const VertexId cut = pick_vertex(rng);
      attachments.push_back({cut, pick_side(rng) ? Side::Y : Side::X});
      vertices += b.size() - 1;
    } else {
      vertices += b.size();
    }
    blocks.push_back(b);
  }
  return build_graph(std::move(blocks), std::move(attachments));
}

}  // namespace expdist
