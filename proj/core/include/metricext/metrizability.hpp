// metrizability.hpp - pseudometrizability / metrizability checks with
// certificates, via both characterizations.
#pragma once

#include <optional>
#include <utility>

#include "metricext/distance_matrix.hpp"
#include "metricext/graph.hpp"

namespace metricext {

// An edge whose weight exceeds the shortest-path distance of its endpoints.
struct EdgeViolation {
  int u;
  int v;
  Rational edge_weight;
  Rational distance;
};

// A cycle where twice the maximum edge weight exceeds the total weight.
struct CycleViolation {
  Cycle cycle;
};

struct MetrizabilityVerdict {
  bool pseudometrizable = false;
  bool metrizable = false;
  std::optional<EdgeViolation> violating_edge;
  std::optional<CycleViolation> violating_cycle;
  std::optional<std::pair<int, int>> zero_distance_pair;
};

// Polynomial check: w({u,v}) == d_w(u,v) on every edge. Returns the first
// violating edge in canonical order, or nullopt when consistent.
// Precondition: d == shortest_path_metric(g).
std::optional<EdgeViolation> check_edge_consistency(const WeightedGraph& g,
                                                    const DistanceMatrix& d);

// Exponential oracle: every cycle C must satisfy
// 2 * max edge weight <= total weight. Returns a violating cycle if any.
std::optional<CycleViolation> check_cycle_condition(
    const WeightedGraph& g, std::uint64_t cap = kDefaultEnumerationCap);

// Full classification of a connected graph. Pseudometrizability is decided
// via the edge-consistency route; metrizability additionally needs all
// distances between distinct vertices positive.
MetrizabilityVerdict classify(const WeightedGraph& g);

}  // namespace metricext
