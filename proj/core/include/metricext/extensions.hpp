// extensions.hpp - the partially ordered set of continuations: verification,
// comparison, the greatest element and explicit second extensions.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metricext/distance_matrix.hpp"
#include "metricext/graph.hpp"
#include "metricext/uniqueness.hpp"

namespace metricext {

enum class AxiomFailure {
  negative_entry,
  nonzero_diagonal,
  asymmetric,
  triangle,
  edge_disagreement,
  zero_distance,  // metric mode only
};

const char* axiom_failure_name(AxiomFailure kind);

// First-failure certificate of verify_extension. ok == true means d is a
// (pseudo)metric agreeing with the weight on every edge.
struct VerificationResult {
  bool ok = true;
  std::optional<AxiomFailure> failure;
  std::vector<int> witness_vertices;  // the offending pair or triple
  std::string detail;

  explicit operator bool() const { return ok; }
};

enum class OrderRelation { equal, less_or_equal, greater_or_equal, incomparable };

const char* order_relation_name(OrderRelation r);

struct ExtensionComparison {
  OrderRelation relation = OrderRelation::equal;
  // Pair where d1 > d2 (present unless d1 <= d2 entrywise), and vice versa.
  std::optional<std::pair<int, int>> exceeds_pair;
  std::optional<std::pair<int, int>> deceeds_pair;
};

VerificationResult verify_extension(const WeightedGraph& g,
                                    const DistanceMatrix& d,
                                    ContinuationMode mode);

// Entrywise comparison of two matrices over the same vertex set.
ExtensionComparison compare_extensions(const DistanceMatrix& d1,
                                       const DistanceMatrix& d2);

// The shortest-path pseudometric, which is the greatest element of the
// poset of continuations. Throws Disconnected / NotPseudometrizable.
DistanceMatrix greatest_extension(const WeightedGraph& g);

// A second metric continuation for a slack pair: inserts the missing edge
// {u,v} with weight r = (Q(u,v) + d_w(u,v)) / 2 and returns the new
// shortest-path metric. Its (u,v) entry is r < d_w(u,v).
// Throws NoSlack when the pair is already forced.
DistanceMatrix witness_alternative(const WeightedGraph& g, int u, int v,
                                   std::uint64_t cap = kDefaultEnumerationCap);

// Up to `count` distinct verified extensions, starting with the greatest
// element and then composing witness constructions at randomly chosen slack
// pairs of successively augmented graphs. Deterministic under a fixed seed.
std::vector<DistanceMatrix> sample_extensions(const WeightedGraph& g,
                                              int count, std::uint64_t seed);

}  // namespace metricext
