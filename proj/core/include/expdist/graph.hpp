#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace expdist {

using VertexId = std::size_t;

enum class Side : std::uint8_t { X, Y };

constexpr Side opposite(Side s) noexcept { return s == Side::X ? Side::Y : Side::X; }
constexpr char side_letter(Side s) noexcept { return s == Side::X ? 'X' : 'Y'; }

/// One complete bipartite block K_{m,n}: m vertices in part X, n in part Y.
struct BlockSpec {
  std::size_t m = 1;
  std::size_t n = 1;

  std::size_t size() const noexcept { return m + n; }
  std::size_t side_size(Side s) const noexcept { return s == Side::X ? m : n; }
  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// Glues a new block onto an existing vertex; `side` is the part of the new
/// block that the existing vertex occupies.
struct Attachment {
  VertexId cut_vertex = 0;
  Side side = Side::X;
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct Membership {
  std::size_t block = 0;
  Side side = Side::X;
  friend bool operator==(const Membership&, const Membership&) = default;
};

/// Dense symmetric matrix of hop counts.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  unsigned operator()(VertexId u, VertexId v) const { return d_[u * n_ + v]; }
  unsigned& operator()(VertexId u, VertexId v) { return d_[u * n_ + v]; }
  unsigned diameter() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<unsigned> d_;
};

/// Connected graph whose blocks are all complete bipartite, in the canonical
/// block-attachment form. Vertex numbering: block 0 takes ids 0..m+n-1 with X
/// before Y; every later block appends its m+n-1 new vertices, X slots then Y
/// slots, skipping the slot taken by its cut vertex (always offset 0 of the
/// attachment side). Immutable once built.
class BiBlockGraph {
 public:
  const std::vector<BlockSpec>& blocks() const noexcept { return blocks_; }
  const std::vector<Attachment>& attachments() const noexcept { return attachments_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t vertex_count() const noexcept { return memberships_.size(); }

  std::span<const Membership> memberships(VertexId v) const { return memberships_.at(v); }
  /// Vertices of part `side` of block `block`, ordered by offset.
  std::span<const VertexId> block_part(std::size_t block, Side side) const;
  /// Global id of (block, side, offset).
  VertexId vertex_at(std::size_t block, Side side, std::size_t offset) const;

  const DistanceMatrix& distances() const noexcept { return distances_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  bool is_tree() const;

  friend BiBlockGraph build_graph(std::vector<BlockSpec> blocks,
                                  std::vector<Attachment> attachments);

 private:
  std::vector<BlockSpec> blocks_;
  std::vector<Attachment> attachments_;
  std::vector<std::vector<Membership>> memberships_;
  // parts_[b][0] is X, parts_[b][1] is Y
  std::vector<std::vector<std::vector<VertexId>>> parts_;
  std::vector<std::vector<VertexId>> adjacency_;
  DistanceMatrix distances_;
};

/// Builds the graph by iterated leaf-block attachment; attachment i glues
/// block i+1. Throws BadAttachment (wrong count or cut vertex out of range)
/// or BadBlockSpec (a part of size zero).
BiBlockGraph build_graph(std::vector<BlockSpec> blocks, std::vector<Attachment> attachments);

/// All-pairs hop distances by BFS from every vertex.
DistanceMatrix distance_matrix(const BiBlockGraph& g);

/// Number of blocks containing `v`.
std::size_t block_index(const BiBlockGraph& g, VertexId v);

/// Deterministic test-case generator: r blocks with m_i uniform in
/// [1, max_m] and n_i uniform in [1, max_n]; each attachment picks a uniform
/// existing vertex and a uniform side.
BiBlockGraph random_bi_block(std::uint64_t seed, std::size_t r, std::size_t max_m,
                             std::size_t max_n);

}  // namespace expdist
