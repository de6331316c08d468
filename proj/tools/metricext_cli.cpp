// metricext_cli.cpp - command-line front end: check / extend / unique /
// witness / analyze over graph files.
//
// Exit codes: 0 = property holds, 1 = property fails (with certificate),
// 2 = input or usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "metricext/errors.hpp"
#include "metricext/extensions.hpp"
#include "metricext/graph_io.hpp"
#include "metricext/metrizability.hpp"
#include "metricext/report.hpp"
#include "metricext/shortest_path.hpp"
#include "metricext/uniqueness.hpp"

namespace {

using namespace metricext;
using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

void print_matrix(const DistanceMatrix& d) {
  std::size_t width = 1;
  for (const auto& l : d.labels()) width = std::max(width, l.size());
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) {
      width = std::max(width, format_rational(d.at(i, j)).size());
    }
  }
  auto cell = [&](const std::string& s) {
    std::cout << s << std::string(width + 2 - s.size(), ' ');
  };
  cell("");
  for (const auto& l : d.labels()) cell(l);
  std::cout << "\n";
  for (int i = 0; i < d.size(); ++i) {
    cell(d.labels()[i]);
    for (int j = 0; j < d.size(); ++j) cell(format_rational(d.at(i, j)));
    std::cout << "\n";
  }
}

void print_defect(const WeightedGraph& g, const DefectReport& r) {
  std::cout << "  pair {" << g.label(r.pair.first) << "," << g.label(r.pair.second)
            << "}: d_w = " << format_rational(r.d_value)
            << ", Q = " << format_rational(r.q_sup)
            << ", slack = " << format_rational(r.slack) << ", argmax";
  for (int v : r.argmax_path.vertices) std::cout << " " << g.label(v);
  std::cout << "\n";
}

std::optional<CycleViolation> cycle_certificate(const WeightedGraph& g,
                                                std::uint64_t cap) {
  try {
    return check_cycle_condition(g, cap);
  } catch (const Error&) {
    return std::nullopt;  // enumeration blew the cap; edge certificate stands
  }
}

struct Options {
  std::string input;
  std::string format = "auto";
  std::string mode = "metric";
  std::string pair;
  bool as_json = false;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
};

WeightedGraph load(const Options& opt) {
  if (opt.format == "auto") return load_graph_file(opt.input);
  std::ifstream in(opt.input);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + opt.input + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(),
                     opt.format == "json" ? GraphFormat::json : GraphFormat::edge_list);
}

ContinuationMode mode_of(const Options& opt) {
  return opt.mode == "pseudometric" ? ContinuationMode::pseudometric
                                    : ContinuationMode::metric;
}

int cmd_check(const Options& opt) {
  WeightedGraph g = load(opt);
  MetrizabilityVerdict v = classify(g);
  json out;
  out["pseudometrizable"] = v.pseudometrizable;
  out["metrizable"] = v.metrizable;
  out["violating_edge"] = nullptr;
  out["violating_cycle"] = nullptr;
  out["zero_distance_pair"] = nullptr;

  std::optional<CycleViolation> cyc;
  if (!v.pseudometrizable) cyc = cycle_certificate(g, opt.cap);

  if (opt.as_json) {
    if (v.violating_edge) {
      out["violating_edge"] = {
          {"edge", {g.label(v.violating_edge->u), g.label(v.violating_edge->v)}},
          {"w", rational_to_json(v.violating_edge->edge_weight)},
          {"d_w", rational_to_json(v.violating_edge->distance)}};
    }
    if (cyc) {
      json verts = json::array();
      for (int x : cyc->cycle.vertices) verts.push_back(g.label(x));
      out["violating_cycle"] = {
          {"vertices", std::move(verts)},
          {"total_weight", rational_to_json(cyc->cycle.total_weight)},
          {"max_edge_weight", rational_to_json(cyc->cycle.max_edge_weight)}};
    }
    if (v.zero_distance_pair) {
      out["zero_distance_pair"] = {g.label(v.zero_distance_pair->first),
                                   g.label(v.zero_distance_pair->second)};
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "pseudometrizable: " << (v.pseudometrizable ? "true" : "false") << "\n";
    std::cout << "metrizable: " << (v.metrizable ? "true" : "false") << "\n";
    if (v.violating_edge) {
      std::cout << "violating edge {" << g.label(v.violating_edge->u) << ","
                << g.label(v.violating_edge->v)
                << "}: w = " << format_rational(v.violating_edge->edge_weight)
                << ", d_w = " << format_rational(v.violating_edge->distance) << "\n";
    }
    if (cyc) {
      std::cout << "violating cycle:";
      for (int x : cyc->cycle.vertices) std::cout << " " << g.label(x);
      std::cout << " (max edge " << format_rational(cyc->cycle.max_edge_weight)
                << ", total " << format_rational(cyc->cycle.total_weight) << ")\n";
    }
    if (v.zero_distance_pair) {
      std::cout << "zero-distance pair {" << g.label(v.zero_distance_pair->first) << ","
                << g.label(v.zero_distance_pair->second) << "}\n";
    }
  }
  return v.pseudometrizable ? kExitHolds : kExitFails;
}

int cmd_extend(const Options& opt) {
  WeightedGraph g = load(opt);
  MetrizabilityVerdict v = classify(g);
  if (!v.pseudometrizable) {
    if (v.violating_edge) {
      std::cerr << "not pseudometrizable: edge {" << g.label(v.violating_edge->u) << ","
                << g.label(v.violating_edge->v)
                << "} has w = " << format_rational(v.violating_edge->edge_weight)
                << " > d_w = " << format_rational(v.violating_edge->distance) << "\n";
    }
    return kExitFails;
  }
  DistanceMatrix d = greatest_extension(g);
  if (opt.as_json) {
    std::cout << matrix_to_json(d).dump(2) << "\n";
  } else {
    print_matrix(d);
  }
  return kExitHolds;
}

int cmd_unique(const Options& opt) {
  WeightedGraph g = load(opt);
  UniquenessVerdict v = decide_uniqueness(g, mode_of(opt), opt.cap);
  if (opt.as_json) {
    json out;
    out["unique"] = v.unique;
    out["mode"] = mode_name(v.mode);
    out["slack_pairs"] = json::array();
    for (const DefectReport& r : v.slack_pairs) {
      out["slack_pairs"].push_back(defect_report_to_json(g, r));
    }
    out["zero_distance_pairs"] = json::array();
    for (const auto& [a, b] : v.zero_distance_pairs) {
      out["zero_distance_pairs"].push_back({g.label(a), g.label(b)});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "unique: " << (v.unique ? "true" : "false") << " (mode "
              << mode_name(v.mode) << ")\n";
    for (const DefectReport& r : v.slack_pairs) print_defect(g, r);
    for (const auto& [a, b] : v.zero_distance_pairs) {
      std::cout << "  zero-distance pair {" << g.label(a) << "," << g.label(b) << "}\n";
    }
  }
  return v.unique ? kExitHolds : kExitFails;
}

int cmd_witness(const Options& opt) {
  WeightedGraph g = load(opt);
  auto comma = opt.pair.find(',');
  if (comma == std::string::npos) {
    throw Error(Errc::parse_error, "--pair expects '<u>,<v>'");
  }
  int u = g.index_of(opt.pair.substr(0, comma));
  int v = g.index_of(opt.pair.substr(comma + 1));
  std::optional<DistanceMatrix> d;
  try {
    d = witness_alternative(g, u, v, opt.cap);
  } catch (const Error& e) {
    if (e.code() == Errc::no_slack) {
      std::cout << e.what() << "\n";
      return kExitFails;
    }
    throw;
  }
  if (opt.as_json) {
    json out = matrix_to_json(*d);
    out["pair"] = {g.label(std::min(u, v)), g.label(std::max(u, v))};
    out["value"] = rational_to_json(d->at(u, v));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "alternative extension with d(" << g.label(u) << "," << g.label(v)
              << ") = " << format_rational(d->at(u, v)) << ":\n";
    print_matrix(*d);
  }
  return kExitHolds;
}

int cmd_analyze(const Options& opt) {
  WeightedGraph g = load(opt);
  json report = analysis_report(g, mode_of(opt), opt.cap);
  if (opt.as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    const json& m = report["metrizability"];
    std::cout << "pseudometrizable: " << m["pseudometrizable"] << "\n";
    std::cout << "metrizable: " << m["metrizable"] << "\n";
    if (!report["distances"].is_null()) {
      std::cout << "greatest extension:\n";
      print_matrix(shortest_path_metric(g));
    }
    if (!report["uniqueness"].is_null()) {
      std::cout << "unique: " << report["uniqueness"]["unique"] << " (mode "
                << opt.mode << ")\n";
    }
    if (!report["defects"].is_null()) {
      std::cout << "non-adjacent pairs:\n";
      DistanceMatrix d = shortest_path_metric(g);
      for (int i = 0; i < g.vertex_count(); ++i) {
        for (int j = i + 1; j < g.vertex_count(); ++j) {
          if (g.has_edge(i, j)) continue;
          print_defect(g, detail::defect_supremum_with(g, d, i, j, opt.cap));
        }
      }
    }
  }
  return report["metrizability"]["pseudometrizable"].get<bool>() ? kExitHolds
                                                                 : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric extension toolkit: decide extendability and uniqueness "
               "of edge weights"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "graph file (.json or edge list)")->required();
    sub->add_option("--format", opt.format, "input format")
        ->check(CLI::IsMember({"auto", "json", "edge-list"}));
    sub->add_flag("--json", opt.as_json, "emit JSON instead of tables");
    sub->add_option("--cap", opt.cap, "enumeration cap");
  };
  CLI::App* check = app.add_subcommand("check", "metrizability verdict");
  add_common(check);
  CLI::App* extend = app.add_subcommand("extend", "greatest extension d_w");
  add_common(extend);
  CLI::App* unique = app.add_subcommand("unique", "uniqueness of the continuation");
  add_common(unique);
  unique->add_option("--mode", opt.mode, "continuation mode")
      ->check(CLI::IsMember({"metric", "pseudometric"}));
  CLI::App* witness = app.add_subcommand("witness", "alternative extension at a pair");
  add_common(witness);
  witness->add_option("--pair", opt.pair, "non-adjacent pair '<u>,<v>'")->required();
  CLI::App* analyze = app.add_subcommand("analyze", "full analysis report");
  add_common(analyze);
  analyze->add_option("--mode", opt.mode, "continuation mode")
      ->check(CLI::IsMember({"metric", "pseudometric"}));
  analyze->add_option("--seed", opt.seed, "sampling seed (reserved)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (extend->parsed()) return cmd_extend(opt);
    if (unique->parsed()) return cmd_unique(opt);
    if (witness->parsed()) return cmd_witness(opt);
    if (analyze->parsed()) return cmd_analyze(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
