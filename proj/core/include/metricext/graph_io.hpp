// graph_io.hpp - graph documents: JSON and whitespace edge-list formats.
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "metricext/graph.hpp"

namespace metricext {

enum class GraphFormat { json, edge_list };

// Textual form of a graph. Weights stay strings ("1.25" or "5/4") so the
// document round-trips losslessly and never touches binary floating point.
struct GraphDocument {
  GraphFormat format = GraphFormat::json;
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> edges;  // (label, label, weight)

  WeightedGraph to_graph() const;
};

// Edge list: one `<label> <label> <weight>` per line, `#` comments and blank
// lines ignored. JSON: {"vertices": [...], "edges": [{"a","b","w"}]}.
// Parse errors carry line / field locations.
GraphDocument parse_document(std::string_view text, GraphFormat format);

std::string serialize_document(const GraphDocument& doc);

// Convenience: parse straight to a validated graph.
WeightedGraph parse_graph(std::string_view text, GraphFormat format);

WeightedGraph load_graph_file(const std::string& path);

}  // namespace metricext
