#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "expdist/graph.hpp"
#include "expdist/matrix.hpp"
#include "expdist/recognition.hpp"
#include "expdist/verify.hpp"

namespace expdist::cli {

/// Problems with the shape of a spec or report document, named like library
/// errors ("AmbiguousSpec", "InvalidSpec", "InvalidReport").
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)), detail_(detail) {}
  const std::string& name() const noexcept { return name_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string name_;
  std::string detail_;
};

/// Parsed GraphSpecFile: either the block-attachment model or a raw edge list.
struct GraphSpec {
  std::vector<BlockSpec> blocks;
  std::vector<Attachment> attachments;
  std::optional<std::vector<Edge>> edges;
  std::size_t vertex_count = 0;  // edge form only; 0 means max id + 1
};

GraphSpec parse_graph_spec(const nlohmann::json& doc);

/// Canonical graph plus, for edge-list input, the canonical-to-input id map.
struct LoadedGraph {
  BiBlockGraph graph;
  std::optional<std::vector<VertexId>> input_vertex;
};

/// Builds or recognizes the graph; library validation errors propagate as expdist::Error.
LoadedGraph load_graph(const GraphSpec& spec);

nlohmann::json blocks_json(const std::vector<BlockSpec>& blocks);
nlohmann::json attachments_json(const std::vector<Attachment>& attachments);
nlohmann::json graph_json(const LoadedGraph& loaded);
nlohmann::json matrix_json(const RationalMatrix& m);
nlohmann::json vector_json(const RationalVector& v);

nlohmann::json report_to_json(const SweepReport& report);
/// Inverse of report_to_json (timings are not serialized). Throws FormatError.
SweepReport report_from_json(const nlohmann::json& doc);

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& doc);

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace expdist::cli
