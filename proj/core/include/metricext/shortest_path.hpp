// shortest_path.hpp - exact all-pairs and single-pair shortest paths.
#pragma once

#include <utility>

#include "metricext/distance_matrix.hpp"
#include "metricext/graph.hpp"

namespace metricext {

// The shortest-path pseudometric: entry (u,v) is the minimum total weight
// over all u-v paths. Exact rational arithmetic throughout.
// Throws Error{disconnected} when g is not connected.
DistanceMatrix shortest_path_metric(const WeightedGraph& g);

// An attaining path for one pair; ties broken by the lexicographically
// smallest canonical vertex sequence. Throws Error{no_path} when u and v
// are in different components.
std::pair<Rational, Path> shortest_path_between(const WeightedGraph& g, int u,
                                                int v);

}  // namespace metricext
