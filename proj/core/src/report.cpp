#include "metricext/report.hpp"

#include "metricext/errors.hpp"
#include "metricext/extensions.hpp"
#include "metricext/metrizability.hpp"
#include "metricext/shortest_path.hpp"

namespace metricext {

using nlohmann::json;

json rational_to_json(const Rational& r) {
  return {{"exact", format_rational(r)}, {"approx", format_approx(r)}};
}

json matrix_to_json(const DistanceMatrix& d) {
  json rows = json::array();
  for (int i = 0; i < d.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < d.size(); ++j) row.push_back(format_rational(d.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"vertices", d.labels()},
          {"provenance", provenance_name(d.provenance())},
          {"matrix", std::move(rows)}};
}

json path_to_json(const WeightedGraph& g, const Path& p) {
  json verts = json::array();
  for (int v : p.vertices) verts.push_back(g.label(v));
  return {{"vertices", std::move(verts)},
          {"total_weight", rational_to_json(p.total_weight)},
          {"max_edge_weight", rational_to_json(p.max_edge_weight)}};
}

json defect_report_to_json(const WeightedGraph& g, const DefectReport& report) {
  return {{"pair", {g.label(report.pair.first), g.label(report.pair.second)}},
          {"d", rational_to_json(report.d_value)},
          {"q_sup", rational_to_json(report.q_sup)},
          {"slack", rational_to_json(report.slack)},
          {"argmax_path", path_to_json(g, report.argmax_path)}};
}

namespace {

json metrizability_to_json(const WeightedGraph& g, const MetrizabilityVerdict& v) {
  json out;
  out["pseudometrizable"] = v.pseudometrizable;
  out["metrizable"] = v.metrizable;
  out["violating_edge"] = nullptr;
  out["violating_cycle"] = nullptr;
  out["zero_distance_pair"] = nullptr;
  if (v.violating_edge) {
    out["violating_edge"] = {
        {"edge", {g.label(v.violating_edge->u), g.label(v.violating_edge->v)}},
        {"w", rational_to_json(v.violating_edge->edge_weight)},
        {"d_w", rational_to_json(v.violating_edge->distance)}};
  }
  if (v.violating_cycle) {
    json verts = json::array();
    for (int x : v.violating_cycle->cycle.vertices) verts.push_back(g.label(x));
    out["violating_cycle"] = {
        {"vertices", std::move(verts)},
        {"total_weight", rational_to_json(v.violating_cycle->cycle.total_weight)},
        {"max_edge_weight", rational_to_json(v.violating_cycle->cycle.max_edge_weight)}};
  }
  if (v.zero_distance_pair) {
    out["zero_distance_pair"] = {g.label(v.zero_distance_pair->first),
                                 g.label(v.zero_distance_pair->second)};
  }
  return out;
}

json uniqueness_to_json(const WeightedGraph& g, const UniquenessVerdict& v) {
  json slack = json::array();
  for (const DefectReport& r : v.slack_pairs) slack.push_back(defect_report_to_json(g, r));
  json zeros = json::array();
  for (const auto& [a, b] : v.zero_distance_pairs) {
    zeros.push_back({g.label(a), g.label(b)});
  }
  return {{"unique", v.unique},
          {"mode", mode_name(v.mode)},
          {"slack_pairs", std::move(slack)},
          {"zero_distance_pairs", std::move(zeros)}};
}

}  // namespace

json analysis_report(const WeightedGraph& g, ContinuationMode mode,
                     std::uint64_t cap) {
  json out;
  out["schema_version"] = kReportSchemaVersion;

  MetrizabilityVerdict verdict = classify(g);
  out["metrizability"] = metrizability_to_json(g, verdict);
  out["distances"] = nullptr;
  out["defects"] = nullptr;
  out["uniqueness"] = nullptr;
  out["witnesses"] = nullptr;
  if (!verdict.pseudometrizable) return out;

  DistanceMatrix d = shortest_path_metric(g);
  out["distances"] = matrix_to_json(d);

  json defects = json::array();
  int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      defects.push_back(
          defect_report_to_json(g, detail::defect_supremum_with(g, d, i, j, cap)));
    }
  }
  out["defects"] = std::move(defects);

  bool mode_ok = mode == ContinuationMode::pseudometric || verdict.metrizable;
  if (mode_ok) {
    UniquenessVerdict uniq = decide_uniqueness(g, mode, cap);
    out["uniqueness"] = uniqueness_to_json(g, uniq);
    if (verdict.metrizable) {
      json witnesses = json::array();
      for (const DefectReport& r : uniq.slack_pairs) {
        DistanceMatrix w = witness_alternative(g, r.pair.first, r.pair.second, cap);
        witnesses.push_back(
            {{"pair", {g.label(r.pair.first), g.label(r.pair.second)}},
             {"value", rational_to_json(w.at(r.pair.first, r.pair.second))},
             {"matrix", matrix_to_json(w)}});
      }
      out["witnesses"] = std::move(witnesses);
    }
  }
  return out;
}

}  // namespace metricext
