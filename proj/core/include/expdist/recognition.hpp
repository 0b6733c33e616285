#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "expdist/graph.hpp"

namespace expdist {

using Edge = std::pair<VertexId, VertexId>;

/// Result of edge-list ingestion: the canonical model plus, for every
/// canonical vertex id, the id it had in the input.
struct RecognizedGraph {
  BiBlockGraph graph;
  std::vector<VertexId> input_vertex;
};

/// Biconnected components of a simple connected graph, each given as the
/// sorted list of its vertices. Components are listed in the order the DFS
/// (rooted at 0, neighbours ascending) closes them.
std::vector<std::vector<VertexId>> biconnected_components(std::size_t vertex_count,
                                                          std::span<const Edge> edges);

/// Validates that the edge list describes a bi-block graph and rebuilds its
/// block-attachment model. The block-cut tree is rooted at input vertex 0 and
/// traversed breadth first; ties are broken by ascending input id, and the X
/// part of every block is the colour class holding the block's smallest
/// input id.
///
/// Errors: VertexOutOfRange, MultiEdgeOrLoop, NotConnected, BlockNotBipartite,
/// BlockNotCompleteBipartite, BadBlockSpec (no edges at all).
RecognizedGraph ingest_edge_list(std::span<const Edge> edges, std::size_t vertex_count);

}  // namespace expdist
