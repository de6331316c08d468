// report.hpp - machine-readable analysis report (JSON).
#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

#include "metricext/distance_matrix.hpp"
#include "metricext/graph.hpp"
#include "metricext/uniqueness.hpp"

namespace metricext {

inline constexpr int kReportSchemaVersion = 1;

// Rational as {"exact": "p/q", "approx": "..."}; the approximation is
// display-only.
nlohmann::json rational_to_json(const Rational& r);

nlohmann::json matrix_to_json(const DistanceMatrix& d);

nlohmann::json path_to_json(const WeightedGraph& g, const Path& p);

nlohmann::json defect_report_to_json(const WeightedGraph& g,
                                     const DefectReport& report);

// Full analysis: classification, d_w, every non-adjacent pair's defect data
// and a witness extension for every slack pair (metrizable weights only).
// Top-level keys: schema_version, metrizability, distances, defects,
// uniqueness, witnesses.
nlohmann::json analysis_report(const WeightedGraph& g, ContinuationMode mode,
                               std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace metricext
