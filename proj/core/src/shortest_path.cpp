#include "metricext/shortest_path.hpp"

#include <functional>
#include <optional>
#include <vector>

#include "metricext/errors.hpp"

namespace metricext {
namespace {

// Floyd-Warshall over optionals; nullopt stands for "unreachable".
std::vector<std::optional<Rational>> all_pairs(const WeightedGraph& g) {
  int n = g.vertex_count();
  std::vector<std::optional<Rational>> d(n * n);
  for (int i = 0; i < n; ++i) d[i * n + i] = Rational(0);
  for (const auto& [u, v] : g.edges()) {
    const Rational& w = g.edge_weight(u, v);
    // min() guards parallel relaxations only in theory; the graph is simple.
    if (!d[u * n + v] || w < *d[u * n + v]) {
      d[u * n + v] = w;
      d[v * n + u] = w;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!d[i * n + k]) continue;
      for (int j = 0; j < n; ++j) {
        if (!d[k * n + j]) continue;
        Rational via = *d[i * n + k] + *d[k * n + j];
        if (!d[i * n + j] || via < *d[i * n + j]) d[i * n + j] = via;
      }
    }
  }
  return d;
}

}  // namespace

DistanceMatrix shortest_path_metric(const WeightedGraph& g) {
  if (!is_connected(g)) {
    throw Error(Errc::disconnected, "shortest-path pseudometric needs a connected graph");
  }
  int n = g.vertex_count();
  auto d = all_pairs(g);
  DistanceMatrix m(g.labels(), Provenance::shortest_path);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m.set(i, j, *d[i * n + j]);
  }
  return m;
}

std::pair<Rational, Path> shortest_path_between(const WeightedGraph& g, int u, int v) {
  if (u == v) throw Error(Errc::parse_error, "endpoints must differ");
  int n = g.vertex_count();
  auto d = all_pairs(g);
  int start = std::min(u, v);
  int goal = std::max(u, v);
  if (!d[start * n + goal]) {
    throw Error(Errc::no_path, "{" + g.label(u) + "," + g.label(v) + "}");
  }
  Rational target = *d[start * n + goal];

  // Backtracking DFS in ascending neighbor order, pruned to prefixes that
  // can still reach the goal at exactly the shortest-path weight. The first
  // complete path is the lexicographically smallest attaining simple path.
  std::vector<bool> on_path(n, false);
  std::vector<int> prefix{start};
  on_path[start] = true;
  std::function<bool(int, Rational)> dfs = [&](int x, Rational remaining) -> bool {
    if (x == goal) return remaining == 0;
    for (int y : g.neighbors(x)) {
      if (on_path[y]) continue;
      const Rational& w = g.edge_weight(x, y);
      if (w > remaining) continue;
      Rational rest = remaining - w;
      if (!d[y * n + goal] || *d[y * n + goal] > rest) continue;
      prefix.push_back(y);
      on_path[y] = true;
      if (dfs(y, rest)) return true;
      on_path[y] = false;
      prefix.pop_back();
    }
    return false;
  };
  if (!dfs(start, target)) {
    // Unreachable for nonnegative weights: some shortest walk shortcuts to a
    // simple path of the same weight.
    throw Error(Errc::no_path, "no simple path attains the shortest distance");
  }
  return {target, make_path(g, prefix)};
}

}  // namespace metricext
