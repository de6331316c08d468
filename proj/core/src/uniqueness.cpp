#include "metricext/uniqueness.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "metricext/errors.hpp"
#include "metricext/shortest_path.hpp"

namespace metricext {

const char* mode_name(ContinuationMode mode) {
  return mode == ContinuationMode::metric ? "metric" : "pseudometric";
}

Rational path_defect(const Path& p) {
  return 2 * p.max_edge_weight - p.total_weight;
}

namespace {

void require_classified(const WeightedGraph& g, ContinuationMode mode) {
  MetrizabilityVerdict verdict = classify(g);  // throws on disconnected
  if (mode == ContinuationMode::metric) {
    if (!verdict.metrizable) {
      throw Error(Errc::not_metrizable, "weight is not metrizable");
    }
  } else if (!verdict.pseudometrizable) {
    throw Error(Errc::not_pseudometrizable, "weight is not pseudometrizable");
  }
}

void require_non_adjacent_pair(const WeightedGraph& g, int u, int v) {
  if (u == v) throw Error(Errc::parse_error, "pair vertices must differ");
  if (g.has_edge(u, v)) {
    throw Error(Errc::adjacent_pair, "{" + g.label(u) + "," + g.label(v) + "}");
  }
}

}  // namespace

namespace detail {

DefectReport defect_supremum_with(const WeightedGraph& g, const DistanceMatrix& d,
                                  int u, int v, std::uint64_t cap) {
  int n = g.vertex_count();
  int start = std::min(u, v);
  int goal = std::max(u, v);
  const Rational& target = d.at(start, goal);
  const Rational& global_max = g.max_edge_weight();

  std::optional<Rational> best;
  std::vector<int> best_path;
  std::vector<bool> on_path(n, false);
  std::vector<int> prefix{start};
  on_path[start] = true;
  std::uint64_t expanded = 0;
  bool done = false;

  // DFS in ascending neighbor order; strict improvement keeps the first
  // attaining path in canonical order. Two sound cuts:
  //   - any completion of the prefix has defect
  //       <= 2*max(prefix max, global max) - (prefix weight + d(x, goal));
  //   - q(P) <= d_w(u,v) on edge-consistent weights, so a path attaining
  //     the distance ends the search.
  std::function<void(int, Rational, Rational)> dfs = [&](int x, Rational weight,
                                                         Rational max_w) {
    if (done) return;
    if (best) {
      Rational ceiling = 2 * std::max(max_w, global_max) - (weight + d.at(x, goal));
      if (ceiling <= *best) return;
    }
    for (int y : g.neighbors(x)) {
      if (on_path[y]) continue;
      const Rational& w = g.edge_weight(x, y);
      Rational next_weight = weight + w;
      Rational next_max = std::max(max_w, w);
      prefix.push_back(y);
      if (y == goal) {
        if (++expanded > cap) {
          throw Error(Errc::cap_exceeded,
                      "more than " + std::to_string(cap) + " paths expanded");
        }
        Rational q = 2 * next_max - next_weight;
        if (!best || q > *best) {
          best = q;
          best_path = prefix;
          if (*best == target) done = true;
        }
      } else {
        on_path[y] = true;
        dfs(y, std::move(next_weight), std::move(next_max));
        on_path[y] = false;
      }
      prefix.pop_back();
      if (done) return;
    }
  };
  dfs(start, Rational(0), Rational(0));

  if (!best) {
    throw Error(Errc::no_path, "{" + g.label(u) + "," + g.label(v) + "}");
  }
  DefectReport report;
  report.pair = {start, goal};
  report.d_value = target;
  report.q_sup = *best;
  report.argmax_path = make_path(g, best_path);
  report.slack = target - *best;
  return report;
}

}  // namespace detail

DefectReport defect_supremum(const WeightedGraph& g, int u, int v,
                             ContinuationMode mode, std::uint64_t cap) {
  require_non_adjacent_pair(g, u, v);
  require_classified(g, mode);
  DistanceMatrix d = shortest_path_metric(g);
  return detail::defect_supremum_with(g, d, u, v, cap);
}

Rational per_edge_defect_upper_bound(const WeightedGraph& g, int u, int v) {
  require_non_adjacent_pair(g, u, v);
  if (!is_connected(g)) {
    throw Error(Errc::disconnected, "bound needs a connected graph");
  }
  int n = g.vertex_count();

  // Edges in ascending weight order; dist holds exact walk distances over
  // the edges admitted so far (nullopt = unreachable).
  auto edge_list = g.edges();
  std::stable_sort(edge_list.begin(), edge_list.end(),
                   [&](const auto& e1, const auto& e2) {
                     return g.edge_weight(e1.first, e1.second) <
                            g.edge_weight(e2.first, e2.second);
                   });
  std::vector<std::optional<Rational>> dist(n * n);
  for (int i = 0; i < n; ++i) dist[i * n + i] = Rational(0);
  auto relax_through = [&](int a, int b, const Rational& w) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (dist[i * n + a] && dist[b * n + j]) {
          Rational via = *dist[i * n + a] + w + *dist[b * n + j];
          if (!dist[i * n + j] || via < *dist[i * n + j]) dist[i * n + j] = via;
        }
        if (dist[i * n + b] && dist[a * n + j]) {
          Rational via = *dist[i * n + b] + w + *dist[a * n + j];
          if (!dist[i * n + j] || via < *dist[i * n + j]) dist[i * n + j] = via;
        }
      }
    }
  };

  std::optional<Rational> bound;
  std::size_t next = 0;
  while (next < edge_list.size()) {
    // Admit the whole batch of equal-weight edges before scoring them, so a
    // walk through f may use other edges of the same weight.
    const Rational& threshold =
        g.edge_weight(edge_list[next].first, edge_list[next].second);
    std::size_t batch_begin = next;
    while (next < edge_list.size() &&
           g.edge_weight(edge_list[next].first, edge_list[next].second) == threshold) {
      auto [a, b] = edge_list[next];
      relax_through(a, b, threshold);
      ++next;
    }
    for (std::size_t k = batch_begin; k < next; ++k) {
      auto [a, b] = edge_list[k];
      const Rational& w = g.edge_weight(a, b);
      std::optional<Rational> walk;
      if (dist[u * n + a] && dist[b * n + v]) {
        walk = *dist[u * n + a] + w + *dist[b * n + v];
      }
      if (dist[u * n + b] && dist[a * n + v]) {
        Rational other = *dist[u * n + b] + w + *dist[a * n + v];
        if (!walk || other < *walk) walk = other;
      }
      if (!walk) continue;
      Rational candidate = 2 * w - *walk;
      if (!bound || candidate > *bound) bound = candidate;
    }
  }
  if (!bound) {
    throw Error(Errc::no_path, "{" + g.label(u) + "," + g.label(v) + "}");
  }
  return *bound;
}

UniquenessVerdict decide_uniqueness(const WeightedGraph& g, ContinuationMode mode,
                                    std::uint64_t cap) {
  require_classified(g, mode);
  DistanceMatrix d = shortest_path_metric(g);
  int n = g.vertex_count();

  UniquenessVerdict verdict;
  verdict.mode = mode;
  if (mode == ContinuationMode::pseudometric) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (d.at(i, j) == 0) verdict.zero_distance_pairs.emplace_back(i, j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      if (mode == ContinuationMode::pseudometric && d.at(i, j) == 0) continue;
      DefectReport report = detail::defect_supremum_with(g, d, i, j, cap);
      if (report.slack > 0) verdict.slack_pairs.push_back(std::move(report));
    }
  }
  std::stable_sort(verdict.slack_pairs.begin(), verdict.slack_pairs.end(),
                   [](const DefectReport& a, const DefectReport& b) {
                     if (a.slack != b.slack) return a.slack > b.slack;
                     return a.pair < b.pair;
                   });
  if (mode == ContinuationMode::metric) {
    verdict.unique = verdict.slack_pairs.empty();
  } else {
    verdict.unique =
        !verdict.zero_distance_pairs.empty() && verdict.slack_pairs.empty();
  }
  return verdict;
}

}  // namespace metricext
