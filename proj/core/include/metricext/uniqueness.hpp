// uniqueness.hpp - path defects, their exact suprema and the uniqueness
// decision for continuations of a weight.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "metricext/distance_matrix.hpp"
#include "metricext/graph.hpp"
#include "metricext/metrizability.hpp"

namespace metricext {

enum class ContinuationMode { metric, pseudometric };

const char* mode_name(ContinuationMode mode);

// Exact defect data for one non-adjacent vertex pair.
struct DefectReport {
  std::pair<int, int> pair;  // canonical: first < second
  Rational d_value;          // shortest-path distance of the pair
  Rational q_sup;            // exact max of the path defect, may be negative
  Path argmax_path;          // first attaining path in canonical order
  Rational slack;            // d_value - q_sup; zero iff the pair is forced
};

struct UniquenessVerdict {
  bool unique = false;
  ContinuationMode mode = ContinuationMode::metric;
  // Non-adjacent pairs with positive slack, sorted by (slack desc, pair).
  std::vector<DefectReport> slack_pairs;
  // Distinct pairs at distance zero (pseudometric mode only).
  std::vector<std::pair<int, int>> zero_distance_pairs;
};

// The defect q(P) = 2 * max edge weight - total weight of P.
Rational path_defect(const Path& p);

// Exact maximum of path_defect over all simple u-v paths, found by a
// pruned depth-first search. Requires a connected graph whose weight is
// metrizable (metric mode) or pseudometrizable (pseudometric mode), and a
// non-adjacent pair. The cap bounds the number of paths expanded.
DefectReport defect_supremum(const WeightedGraph& g, int u, int v,
                             ContinuationMode mode = ContinuationMode::metric,
                             std::uint64_t cap = kDefaultEnumerationCap);

// Relaxation bound: max over edges f of
//   2*w(f) - (shortest u-v walk through f using only edges of weight <= w(f)).
// Every simple path containing its own maximum edge is such a walk, so the
// result dominates the exact supremum. It can strictly overestimate.
Rational per_edge_defect_upper_bound(const WeightedGraph& g, int u, int v);

// Metric mode: unique iff q_sup == d_w for every non-adjacent pair.
// Pseudometric mode: unique (non-metric) continuation iff some pair has
// d_w == 0 and every non-adjacent pair with d_w != 0 has zero slack.
UniquenessVerdict decide_uniqueness(const WeightedGraph& g,
                                    ContinuationMode mode,
                                    std::uint64_t cap = kDefaultEnumerationCap);

namespace detail {
// Shared implementation taking a precomputed shortest-path matrix; the
// metrizability precondition is the caller's responsibility here.
DefectReport defect_supremum_with(const WeightedGraph& g,
                                  const DistanceMatrix& d, int u, int v,
                                  std::uint64_t cap);
}  // namespace detail

}  // namespace metricext
