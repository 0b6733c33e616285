#include "expdist/recognition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "expdist/error.hpp"

namespace expdist {

namespace {

using Adjacency = std::vector<std::vector<VertexId>>;

Adjacency validated_adjacency(std::size_t n, std::span<const Edge> edges) {
  Adjacency adj(n);
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                      ") with vertex_count " + std::to_string(n));
    }
    if (a == b) throw Error(ErrorKind::MultiEdgeOrLoop, "loop at vertex " + std::to_string(a));
    if (!seen.insert(std::minmax(a, b)).second) {
      throw Error(ErrorKind::MultiEdgeOrLoop,
                  "repeated edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

void require_connected(const Adjacency& adj) {
  std::vector<bool> seen(adj.size(), false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      ++reached;
      queue.push_back(v);
    }
  }
  if (reached != adj.size()) {
    throw Error(ErrorKind::NotConnected, std::to_string(adj.size() - reached) +
                                             " vertices unreachable from vertex 0");
  }
}

/// Lowpoint DFS with an explicit edge stack; iterative to stay safe on long paths.
std::vector<std::vector<VertexId>> components_from(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> disc(n, 0);
  std::vector<std::size_t> low(n, 0);
  std::size_t timer = 0;
  std::vector<Edge> edge_stack;
  std::vector<std::vector<VertexId>> out;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++timer;
    std::vector<Frame> stack{{root, root, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const VertexId w = adj[f.v][f.next++];
        if (disc[w] == 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = ++timer;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const VertexId v = f.v;
      const VertexId parent = f.parent;
      stack.pop_back();
      if (stack.empty()) break;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        std::set<VertexId> members;
        while (!edge_stack.empty()) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          members.insert(e.first);
          members.insert(e.second);
          if (e == Edge{parent, v}) break;
        }
        out.emplace_back(members.begin(), members.end());
      }
    }
  }
  return out;
}

struct ColoredBlock {
  std::vector<VertexId> vertices;  // sorted input ids
  std::vector<VertexId> part[2];   // part[0] holds the smallest id
};

ColoredBlock color_block(const Adjacency& adj, std::vector<VertexId> vertices) {
  std::map<VertexId, int> color;
  for (VertexId v : vertices) color[v] = -1;
  std::size_t edge_count = 0;
  color[vertices.front()] = 0;
  std::deque<VertexId> queue{vertices.front()};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : adj[u]) {
      auto it = color.find(w);
      if (it == color.end()) continue;
      if (u < w) ++edge_count;
      if (it->second == -1) {
        it->second = 1 - color[u];
        queue.push_back(w);
      } else if (it->second == color[u]) {
        throw Error(ErrorKind::BlockNotBipartite,
                    "odd cycle through edge (" + std::to_string(u) + ", " + std::to_string(w) + ")");
      }
    }
  }
  ColoredBlock block;
  for (const auto& [v, c] : color) block.part[c].push_back(v);
  if (edge_count != block.part[0].size() * block.part[1].size()) {
    throw Error(ErrorKind::BlockNotCompleteBipartite,
                "block with parts " + std::to_string(block.part[0].size()) + " and " +
                    std::to_string(block.part[1].size()) + " has " + std::to_string(edge_count) +
                    " edges");
  }
  block.vertices = std::move(vertices);
  return block;
}

}  // namespace

std::vector<std::vector<VertexId>> biconnected_components(std::size_t vertex_count,
                                                          std::span<const Edge> edges) {
  return components_from(validated_adjacency(vertex_count, edges));
}

RecognizedGraph ingest_edge_list(std::span<const Edge> edges, std::size_t vertex_count) {
  if (vertex_count == 0 || edges.empty()) {
    throw Error(ErrorKind::BadBlockSpec, "edge list describes no block");
  }
  const Adjacency adj = validated_adjacency(vertex_count, edges);
  require_connected(adj);

  std::vector<ColoredBlock> blocks;
  for (auto& comp : components_from(adj)) blocks.push_back(color_block(adj, std::move(comp)));
  std::sort(blocks.begin(), blocks.end(),
            [](const ColoredBlock& a, const ColoredBlock& b) { return a.vertices < b.vertices; });

  std::vector<std::vector<std::size_t>> blocks_of(vertex_count);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (VertexId v : blocks[b].vertices) blocks_of[v].push_back(b);

  constexpr VertexId kUnassigned = static_cast<VertexId>(-1);
  std::vector<VertexId> canonical(vertex_count, kUnassigned);
  RecognizedGraph result;
  std::vector<BlockSpec> specs;
  std::vector<Attachment> attachments;
  std::vector<bool> visited(blocks.size(), false);
  std::deque<std::size_t> queue;

  auto place_block = [&](std::size_t b, VertexId cut) {
    const ColoredBlock& blk = blocks[b];
    visited[b] = true;
    queue.push_back(b);
    specs.push_back({blk.part[0].size(), blk.part[1].size()});
    if (cut != kUnassigned) {
      const Side cut_side =
          std::binary_search(blk.part[0].begin(), blk.part[0].end(), cut) ? Side::X : Side::Y;
      attachments.push_back({canonical[cut], cut_side});
    }
    for (const auto& part : blk.part) {
      for (VertexId v : part) {
        if (v == cut) continue;
        canonical[v] = result.input_vertex.size();
        result.input_vertex.push_back(v);
      }
    }
  };

  // Blocks are sorted by vertex list, so the first block holding vertex 0 is
  // the lexicographically smallest one.
  place_block(blocks_of[0].front(), kUnassigned);
  while (!queue.empty()) {
    const std::size_t b = queue.front();
    queue.pop_front();
    for (VertexId v : blocks[b].vertices) {
      for (std::size_t child : blocks_of[v]) {
        if (!visited[child]) place_block(child, v);
      }
    }
  }

  result.graph = build_graph(std::move(specs), std::move(attachments));
  return result;
}

}  // namespace expdist
