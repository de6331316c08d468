#include "metricext/graph.hpp"

#include <algorithm>
#include <set>

namespace metricext {

WeightedGraph WeightedGraph::build(const std::vector<std::string>& vertex_labels,
                                   const std::vector<EdgeSpec>& edges) {
  WeightedGraph g;
  g.labels_ = vertex_labels;
  std::sort(g.labels_.begin(), g.labels_.end());
  for (std::size_t i = 1; i < g.labels_.size(); ++i) {
    if (g.labels_[i] == g.labels_[i - 1]) {
      throw Error(Errc::duplicate_vertex, "'" + g.labels_[i] + "'");
    }
  }
  g.adjacency_.resize(g.labels_.size());

  for (const EdgeSpec& e : edges) {
    if (e.a == e.b) {
      throw Error(Errc::self_loop, "edge {" + e.a + "," + e.b + "}");
    }
    if (!g.has_vertex(e.a)) throw Error(Errc::unknown_endpoint, "'" + e.a + "'");
    if (!g.has_vertex(e.b)) throw Error(Errc::unknown_endpoint, "'" + e.b + "'");
    if (e.weight < 0) {
      throw Error(Errc::negative_weight,
                  "edge {" + e.a + "," + e.b + "} has weight " + format_rational(e.weight));
    }
    int u = g.index_of(e.a);
    int v = g.index_of(e.b);
    auto key = std::minmax(u, v);
    if (!g.weights_.emplace(key, e.weight).second) {
      throw Error(Errc::duplicate_edge, "edge {" + e.a + "," + e.b + "}");
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
    if (e.weight > g.max_edge_weight_) g.max_edge_weight_ = e.weight;
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

int WeightedGraph::index_of(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw Error(Errc::unknown_vertex, "'" + std::string(label) + "'");
  }
  return static_cast<int>(it - labels_.begin());
}

bool WeightedGraph::has_vertex(std::string_view label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool WeightedGraph::has_edge(int u, int v) const {
  return weights_.count(std::minmax(u, v)) != 0;
}

const Rational& WeightedGraph::edge_weight(int u, int v) const {
  auto it = weights_.find(std::minmax(u, v));
  if (it == weights_.end()) {
    throw Error(Errc::unknown_edge, "{" + label(u) + "," + label(v) + "}");
  }
  return it->second;
}

std::vector<std::pair<int, int>> WeightedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(weights_.size());
  for (const auto& [key, w] : weights_) out.push_back(key);
  return out;
}

WeightedGraph WeightedGraph::with_edge(int u, int v, const Rational& weight) const {
  std::vector<EdgeSpec> specs;
  specs.reserve(weights_.size() + 1);
  for (const auto& [key, w] : weights_) {
    specs.push_back({label(key.first), label(key.second), w});
  }
  specs.push_back({label(u), label(v), weight});
  return build(labels_, specs);
}

Path make_path(const WeightedGraph& g, std::vector<int> vertices) {
  if (vertices.size() < 2) {
    throw Error(Errc::parse_error, "a path needs at least one edge");
  }
  std::set<int> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) {
    throw Error(Errc::parse_error, "path vertices must be distinct");
  }
  if (vertices.front() > vertices.back()) {
    std::reverse(vertices.begin(), vertices.end());
  }
  Path p;
  p.total_weight = 0;
  p.max_edge_weight = 0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const Rational& w = g.edge_weight(vertices[i - 1], vertices[i]);
    p.total_weight += w;
    if (w > p.max_edge_weight) p.max_edge_weight = w;
  }
  p.vertices = std::move(vertices);
  return p;
}

Path path_from_labels(const WeightedGraph& g, const std::vector<std::string>& labels) {
  std::vector<int> verts;
  verts.reserve(labels.size());
  for (const auto& l : labels) verts.push_back(g.index_of(l));
  return make_path(g, std::move(verts));
}

Cycle make_cycle(const WeightedGraph& g, std::vector<int> vertices) {
  if (vertices.size() < 3) {
    throw Error(Errc::parse_error, "a cycle needs at least three vertices");
  }
  std::set<int> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) {
    throw Error(Errc::parse_error, "cycle vertices must be distinct");
  }
  // Rotate the smallest vertex to the front, then fix the direction.
  auto smallest = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), smallest, vertices.end());
  if (vertices[1] > vertices.back()) {
    std::reverse(vertices.begin() + 1, vertices.end());
  }
  Cycle c;
  c.total_weight = 0;
  c.max_edge_weight = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int a = vertices[i];
    int b = vertices[(i + 1) % vertices.size()];
    const Rational& w = g.edge_weight(a, b);
    c.total_weight += w;
    if (w > c.max_edge_weight) c.max_edge_weight = w;
  }
  c.vertices = std::move(vertices);
  return c;
}

Rational subgraph_weight(const WeightedGraph& g,
                         const std::vector<std::pair<int, int>>& edge_subset) {
  Rational total = 0;
  for (const auto& [u, v] : edge_subset) total += g.edge_weight(u, v);
  return total;
}

bool is_connected(const WeightedGraph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

void for_each_simple_path(const WeightedGraph& g, int u, int v, std::uint64_t cap,
                          const std::function<bool(const Path&)>& visit) {
  if (u == v) throw Error(Errc::parse_error, "path endpoints must differ");
  int start = std::min(u, v);
  int goal = std::max(u, v);
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<int> prefix{start};
  on_path[start] = true;
  Rational total = 0;
  Rational max_w = 0;
  std::uint64_t emitted = 0;
  bool stop = false;

  // Neighbors are ascending, so canonical sequences come out in
  // lexicographic order.
  std::function<void(int)> dfs = [&](int x) {
    if (stop) return;
    for (int y : g.neighbors(x)) {
      if (on_path[y]) continue;
      const Rational& w = g.edge_weight(x, y);
      Rational prev_total = total;
      Rational prev_max = max_w;
      total += w;
      if (w > max_w) max_w = w;
      prefix.push_back(y);
      if (y == goal) {
        if (++emitted > cap) {
          throw Error(Errc::cap_exceeded,
                      "more than " + std::to_string(cap) + " simple paths");
        }
        Path p;
        p.vertices = prefix;
        p.total_weight = total;
        p.max_edge_weight = max_w;
        if (!visit(p)) stop = true;
      } else {
        on_path[y] = true;
        dfs(y);
        on_path[y] = false;
      }
      prefix.pop_back();
      total = std::move(prev_total);
      max_w = std::move(prev_max);
      if (stop) return;
    }
  };
  dfs(start);
}

std::vector<Path> enumerate_simple_paths(const WeightedGraph& g, int u, int v,
                                         std::uint64_t cap) {
  std::vector<Path> out;
  for_each_simple_path(g, u, v, cap, [&](const Path& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<Cycle> enumerate_cycles(const WeightedGraph& g, std::uint64_t cap) {
  std::vector<Cycle> out;
  int n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  std::vector<int> prefix;

  // Each cycle is found once: started at its smallest vertex, using only
  // larger vertices elsewhere, reflection fixed by prefix[1] < closing vertex.
  for (int s = 0; s < n; ++s) {
    prefix.assign(1, s);
    on_path[s] = true;
    std::function<void(int)> dfs = [&](int x) {
      for (int y : g.neighbors(x)) {
        if (y <= s || on_path[y]) continue;
        prefix.push_back(y);
        if (prefix.size() >= 3 && g.has_edge(y, s) && prefix[1] < y) {
          if (out.size() + 1 > cap) {
            throw Error(Errc::cap_exceeded,
                        "more than " + std::to_string(cap) + " cycles");
          }
          out.push_back(make_cycle(g, prefix));
        }
        on_path[y] = true;
        dfs(y);
        on_path[y] = false;
        prefix.pop_back();
      }
    };
    dfs(s);
    on_path[s] = false;
  }
  return out;
}

}  // namespace metricext
