#include "metricext/metrizability.hpp"

#include "metricext/errors.hpp"
#include "metricext/shortest_path.hpp"

namespace metricext {

std::optional<EdgeViolation> check_edge_consistency(const WeightedGraph& g,
                                                    const DistanceMatrix& d) {
  if (d.size() != g.vertex_count() || d.labels() != g.labels()) {
    throw Error(Errc::dimension_mismatch, "matrix does not index V(g)");
  }
  for (const auto& [u, v] : g.edges()) {
    const Rational& w = g.edge_weight(u, v);
    if (w != d.at(u, v)) {
      return EdgeViolation{u, v, w, d.at(u, v)};
    }
  }
  return std::nullopt;
}

std::optional<CycleViolation> check_cycle_condition(const WeightedGraph& g,
                                                    std::uint64_t cap) {
  for (const Cycle& c : enumerate_cycles(g, cap)) {
    if (2 * c.max_edge_weight > c.total_weight) {
      return CycleViolation{c};
    }
  }
  return std::nullopt;
}

MetrizabilityVerdict classify(const WeightedGraph& g) {
  if (!is_connected(g)) {
    throw Error(Errc::disconnected, "classification needs a connected graph");
  }
  MetrizabilityVerdict verdict;
  DistanceMatrix d = shortest_path_metric(g);
  if (auto violation = check_edge_consistency(g, d)) {
    verdict.violating_edge = std::move(violation);
    return verdict;
  }
  verdict.pseudometrizable = true;
  int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (d.at(i, j) == 0) {
        verdict.zero_distance_pair = std::make_pair(i, j);
        return verdict;
      }
    }
  }
  verdict.metrizable = true;
  return verdict;
}

}  // namespace metricext
