#include "metricext/extensions.hpp"

#include <random>

#include "metricext/errors.hpp"
#include "metricext/shortest_path.hpp"

namespace metricext {

const char* axiom_failure_name(AxiomFailure kind) {
  switch (kind) {
    case AxiomFailure::negative_entry: return "negative_entry";
    case AxiomFailure::nonzero_diagonal: return "nonzero_diagonal";
    case AxiomFailure::asymmetric: return "asymmetric";
    case AxiomFailure::triangle: return "triangle";
    case AxiomFailure::edge_disagreement: return "edge_disagreement";
    case AxiomFailure::zero_distance: return "zero_distance";
  }
  return "unknown";
}

const char* order_relation_name(OrderRelation r) {
  switch (r) {
    case OrderRelation::equal: return "equal";
    case OrderRelation::less_or_equal: return "less_or_equal";
    case OrderRelation::greater_or_equal: return "greater_or_equal";
    case OrderRelation::incomparable: return "incomparable";
  }
  return "unknown";
}

namespace {

VerificationResult fail(AxiomFailure kind, std::vector<int> vertices,
                        std::string detail) {
  VerificationResult r;
  r.ok = false;
  r.failure = kind;
  r.witness_vertices = std::move(vertices);
  r.detail = std::move(detail);
  return r;
}

}  // namespace

VerificationResult verify_extension(const WeightedGraph& g, const DistanceMatrix& d,
                                    ContinuationMode mode) {
  if (d.size() != g.vertex_count() || d.labels() != g.labels()) {
    throw Error(Errc::dimension_mismatch, "matrix does not index V(g)");
  }
  int n = d.size();
  for (int i = 0; i < n; ++i) {
    if (d.at(i, i) != 0) {
      return fail(AxiomFailure::nonzero_diagonal, {i},
                  "d(" + g.label(i) + "," + g.label(i) + ") = " + format_rational(d.at(i, i)));
    }
    for (int j = 0; j < n; ++j) {
      if (d.at(i, j) < 0) {
        return fail(AxiomFailure::negative_entry, {i, j},
                    "d(" + g.label(i) + "," + g.label(j) + ") = " + format_rational(d.at(i, j)));
      }
      if (d.at(i, j) != d.at(j, i)) {
        return fail(AxiomFailure::asymmetric, {i, j},
                    "d(" + g.label(i) + "," + g.label(j) + ") != d(" + g.label(j) +
                        "," + g.label(i) + ")");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (d.at(i, j) > d.at(i, k) + d.at(k, j)) {
          return fail(AxiomFailure::triangle, {i, k, j},
                      "d(" + g.label(i) + "," + g.label(j) + ") = " +
                          format_rational(d.at(i, j)) + " > " +
                          format_rational(d.at(i, k) + d.at(k, j)) + " via " + g.label(k));
        }
      }
    }
  }
  for (const auto& [u, v] : g.edges()) {
    if (d.at(u, v) != g.edge_weight(u, v)) {
      return fail(AxiomFailure::edge_disagreement, {u, v},
                  "edge {" + g.label(u) + "," + g.label(v) + "}: w = " +
                      format_rational(g.edge_weight(u, v)) + ", d = " +
                      format_rational(d.at(u, v)));
    }
  }
  if (mode == ContinuationMode::metric) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (d.at(i, j) == 0) {
          return fail(AxiomFailure::zero_distance, {i, j},
                      "d(" + g.label(i) + "," + g.label(j) + ") = 0 on distinct vertices");
        }
      }
    }
  }
  return VerificationResult{};
}

ExtensionComparison compare_extensions(const DistanceMatrix& d1,
                                       const DistanceMatrix& d2) {
  if (d1.size() != d2.size() || d1.labels() != d2.labels()) {
    throw Error(Errc::dimension_mismatch, "matrices index different vertex sets");
  }
  ExtensionComparison cmp;
  int n = d1.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!cmp.exceeds_pair && d1.at(i, j) > d2.at(i, j)) {
        cmp.exceeds_pair = std::make_pair(i, j);
      }
      if (!cmp.deceeds_pair && d1.at(i, j) < d2.at(i, j)) {
        cmp.deceeds_pair = std::make_pair(i, j);
      }
    }
  }
  if (cmp.exceeds_pair && cmp.deceeds_pair) {
    cmp.relation = OrderRelation::incomparable;
  } else if (cmp.exceeds_pair) {
    cmp.relation = OrderRelation::greater_or_equal;
  } else if (cmp.deceeds_pair) {
    cmp.relation = OrderRelation::less_or_equal;
  } else {
    cmp.relation = OrderRelation::equal;
  }
  return cmp;
}

DistanceMatrix greatest_extension(const WeightedGraph& g) {
  MetrizabilityVerdict verdict = classify(g);
  if (!verdict.pseudometrizable) {
    throw Error(Errc::not_pseudometrizable, "weight has no continuation");
  }
  return shortest_path_metric(g);
}

namespace {

struct WitnessStep {
  DistanceMatrix matrix;
  Rational inserted_weight;
};

// The proof's (G',w'): insert {u,v} with a weight strictly between every
// path defect and d_w(u,v). The midpoint of (Q, d_w) is positive whenever
// the pair has slack on a metrizable weight.
WitnessStep witness_step(const WeightedGraph& g, const DistanceMatrix& d, int u,
                         int v, std::uint64_t cap) {
  DefectReport report = detail::defect_supremum_with(g, d, u, v, cap);
  if (report.slack == 0) {
    throw Error(Errc::no_slack, "{" + g.label(u) + "," + g.label(v) +
                                    "} is forced to " + format_rational(report.d_value));
  }
  Rational r = (report.q_sup + report.d_value) / 2;
  WeightedGraph augmented = g.with_edge(u, v, r);
  DistanceMatrix raw = shortest_path_metric(augmented);
  DistanceMatrix out(raw.labels(), Provenance::witness);
  for (int i = 0; i < out.size(); ++i) {
    for (int j = i + 1; j < out.size(); ++j) out.set(i, j, raw.at(i, j));
  }
  return {std::move(out), std::move(r)};
}

}  // namespace

DistanceMatrix witness_alternative(const WeightedGraph& g, int u, int v,
                                   std::uint64_t cap) {
  if (u == v) throw Error(Errc::parse_error, "pair vertices must differ");
  if (g.has_edge(u, v)) {
    throw Error(Errc::adjacent_pair, "{" + g.label(u) + "," + g.label(v) + "}");
  }
  MetrizabilityVerdict verdict = classify(g);
  if (!verdict.metrizable) {
    throw Error(Errc::not_metrizable, "witness construction needs a metrizable weight");
  }
  DistanceMatrix d = shortest_path_metric(g);
  return witness_step(g, d, u, v, cap).matrix;
}

std::vector<DistanceMatrix> sample_extensions(const WeightedGraph& g, int count,
                                              std::uint64_t seed) {
  MetrizabilityVerdict verdict = classify(g);
  if (!verdict.metrizable) {
    throw Error(Errc::not_metrizable, "sampling needs a metrizable weight");
  }
  std::vector<DistanceMatrix> out;
  if (count <= 0) return out;
  out.push_back(shortest_path_metric(g));

  std::mt19937_64 rng(seed);
  WeightedGraph current = g;
  while (static_cast<int>(out.size()) < count) {
    DistanceMatrix d = shortest_path_metric(current);
    std::vector<std::pair<int, int>> slack_pairs;
    int n = current.vertex_count();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (current.has_edge(i, j)) continue;
        if (detail::defect_supremum_with(current, d, i, j, kDefaultEnumerationCap)
                .slack > 0) {
          slack_pairs.emplace_back(i, j);
        }
      }
    }
    if (slack_pairs.empty()) break;
    auto [u, v] = slack_pairs[rng() % slack_pairs.size()];
    WitnessStep step = witness_step(current, d, u, v, kDefaultEnumerationCap);
    // Each augmentation strictly lowers the chosen entry, so the sequence of
    // matrices is pairwise distinct.
    out.push_back(step.matrix);
    current = current.with_edge(u, v, step.inserted_weight);
  }
  return out;
}

}  // namespace metricext
