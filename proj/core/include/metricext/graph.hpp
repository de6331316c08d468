// graph.hpp - immutable weighted graph, paths, cycles and enumeration.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metricext/errors.hpp"
#include "metricext/rational.hpp"

namespace metricext {

// Enumeration oracles are exponential; this cap keeps them at desk scale.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

struct EdgeSpec {
  std::string a;
  std::string b;
  Rational weight;
};

// Finite simple undirected graph with nonnegative rational edge weights.
// Vertices are indexed 0..n-1 in ascending label order, so index order and
// lexicographic label order coincide. Immutable after build().
class WeightedGraph {
 public:
  static WeightedGraph build(const std::vector<std::string>& vertex_labels,
                             const std::vector<EdgeSpec>& edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(weights_.size()); }

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Throws Error{unknown_vertex} for labels not in the graph.
  int index_of(std::string_view label) const;
  bool has_vertex(std::string_view label) const;

  bool has_edge(int u, int v) const;
  // Throws Error{unknown_edge} for non-edges.
  const Rational& edge_weight(int u, int v) const;

  // Neighbor indices in ascending order.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

  // All edges as (min,max) index pairs in ascending order.
  std::vector<std::pair<int, int>> edges() const;

  // Largest edge weight; zero for an empty edge set.
  const Rational& max_edge_weight() const { return max_edge_weight_; }

  // Copy of this graph plus one extra edge.
  WeightedGraph with_edge(int u, int v, const Rational& weight) const;

 private:
  WeightedGraph() = default;

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adjacency_;
  std::map<std::pair<int, int>, Rational> weights_;
  Rational max_edge_weight_;
};

// Simple path x_0..x_k, k >= 1, canonicalized so that the first vertex is
// the smaller endpoint.
struct Path {
  std::vector<int> vertices;
  Rational total_weight;
  Rational max_edge_weight;

  int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
};

// Cycle v_1..v_n, n >= 3, canonicalized to the smallest rotation with the
// reflection fixed by vertices[1] < vertices.back().
struct Cycle {
  std::vector<int> vertices;
  Rational total_weight;
  Rational max_edge_weight;
};

// Validate a vertex sequence against the host graph and compute weights.
Path make_path(const WeightedGraph& g, std::vector<int> vertices);
Cycle make_cycle(const WeightedGraph& g, std::vector<int> vertices);

Path path_from_labels(const WeightedGraph& g,
                      const std::vector<std::string>& labels);

Rational subgraph_weight(const WeightedGraph& g,
                         const std::vector<std::pair<int, int>>& edge_subset);

bool is_connected(const WeightedGraph& g);

// Calls visit for every simple u-v path exactly once (each undirected path
// emitted once, oriented from min(u,v)), in lexicographic order of the
// canonical vertex sequence. Throws Error{cap_exceeded} past the cap.
// Enumeration stops early when visit returns false.
void for_each_simple_path(const WeightedGraph& g, int u, int v,
                          std::uint64_t cap,
                          const std::function<bool(const Path&)>& visit);

std::vector<Path> enumerate_simple_paths(
    const WeightedGraph& g, int u, int v,
    std::uint64_t cap = kDefaultEnumerationCap);

// Every cycle subgraph exactly once, up to rotation and reflection.
std::vector<Cycle> enumerate_cycles(
    const WeightedGraph& g, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace metricext
