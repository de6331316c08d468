#include "metricext/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "metricext/errors.hpp"

namespace metricext {
namespace {

using nlohmann::json;

GraphDocument parse_edge_list(std::string_view text) {
  GraphDocument doc;
  doc.format = GraphFormat::edge_list;
  std::set<std::string> vertex_set;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, w, extra;
    if (!(fields >> a)) continue;  // blank line
    if (!(fields >> b >> w)) {
      throw Error(Errc::parse_error,
                  "line " + std::to_string(line_no) + ": expected '<label> <label> <weight>'");
    }
    if (fields >> extra) {
      throw Error(Errc::parse_error,
                  "line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
    }
    try {
      parse_weight(w);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    vertex_set.insert(a);
    vertex_set.insert(b);
    doc.edges.push_back({a, b, w});
  }
  doc.vertices.assign(vertex_set.begin(), vertex_set.end());
  return doc;
}

GraphDocument parse_json_document(std::string_view text) {
  GraphDocument doc;
  doc.format = GraphFormat::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw Error(Errc::parse_error, "expected object with 'vertices' and 'edges'");
  }
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw Error(Errc::parse_error, "'vertices' must hold strings");
    doc.vertices.push_back(v.get<std::string>());
  }
  int idx = 0;
  for (const auto& e : j.at("edges")) {
    if (!e.is_object() || !e.contains("a") || !e.contains("b") || !e.contains("w") ||
        !e.at("a").is_string() || !e.at("b").is_string() || !e.at("w").is_string()) {
      throw Error(Errc::parse_error,
                  "edges[" + std::to_string(idx) + "]: expected {\"a\",\"b\",\"w\"} strings");
    }
    try {
      parse_weight(e.at("w").get<std::string>());
    } catch (const Error& err) {
      throw Error(err.code(), "edges[" + std::to_string(idx) + "].w: " + err.what());
    }
    doc.edges.push_back({e.at("a").get<std::string>(), e.at("b").get<std::string>(),
                         e.at("w").get<std::string>()});
    ++idx;
  }
  return doc;
}

}  // namespace

WeightedGraph GraphDocument::to_graph() const {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const auto& [a, b, w] : edges) specs.push_back({a, b, parse_weight(w)});
  return WeightedGraph::build(vertices, specs);
}

GraphDocument parse_document(std::string_view text, GraphFormat format) {
  return format == GraphFormat::json ? parse_json_document(text)
                                     : parse_edge_list(text);
}

std::string serialize_document(const GraphDocument& doc) {
  if (doc.format == GraphFormat::edge_list) {
    std::string out;
    for (const auto& [a, b, w] : doc.edges) {
      out += a + " " + b + " " + w + "\n";
    }
    return out;
  }
  json j;
  j["vertices"] = doc.vertices;
  j["edges"] = json::array();
  for (const auto& [a, b, w] : doc.edges) {
    j["edges"].push_back({{"a", a}, {"b", b}, {"w", w}});
  }
  return j.dump(2) + "\n";
}

WeightedGraph parse_graph(std::string_view text, GraphFormat format) {
  return parse_document(text, format).to_graph();
}

WeightedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  GraphFormat format = path.size() >= 5 && path.substr(path.size() - 5) == ".json"
                           ? GraphFormat::json
                           : GraphFormat::edge_list;
  return parse_graph(buf.str(), format);
}

}  // namespace metricext
