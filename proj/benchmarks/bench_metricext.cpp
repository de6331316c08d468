// bench_metricext.cpp - throughput of the exact kernels on desk-scale inputs.

#include <random>
#include <set>
#include <vector>

#include <benchmark/benchmark.h>

#include "metricext/extensions.hpp"
#include "metricext/shortest_path.hpp"
#include "metricext/uniqueness.hpp"

using namespace metricext;

namespace {

WeightedGraph truncated_fan(int n) {
  std::vector<std::string> labels{"u", "v"};
  std::vector<EdgeSpec> edges;
  for (int k = 1; k <= n; ++k) {
    std::string x = "x" + std::to_string(100 + k);
    labels.push_back(x);
    if (k == 1) {
      edges.push_back({"u", x, 2});
      edges.push_back({x, "v", 2});
    } else {
      edges.push_back({"u", x, 5});
      edges.push_back({x, "v", Rational(1) + Rational(1, k)});
    }
  }
  return WeightedGraph::build(labels, edges);
}

WeightedGraph random_graph(int n, double edge_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(100 + i));
  std::vector<EdgeSpec> edges;
  std::set<std::pair<int, int>> have;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 1; i < n; ++i) {
    int j = static_cast<int>(rng() % i);
    have.insert({j, i});
    edges.push_back({labels[j], labels[i], Rational(1 + static_cast<int>(rng() % 8), 4)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!have.count({i, j}) && coin(rng) < edge_prob) {
        edges.push_back({labels[i], labels[j], Rational(1 + static_cast<int>(rng() % 8), 4)});
      }
    }
  }
  return WeightedGraph::build(labels, edges);
}

void BM_ShortestPathMetric(benchmark::State& state) {
  WeightedGraph g = random_graph(static_cast<int>(state.range(0)), 0.3, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shortest_path_metric(g));
  }
}
BENCHMARK(BM_ShortestPathMetric)->Arg(16)->Arg(32)->Arg(64);

void BM_DefectSupremum(benchmark::State& state) {
  WeightedGraph g = truncated_fan(static_cast<int>(state.range(0)));
  int u = g.index_of("u"), v = g.index_of("v");
  for (auto _ : state) {
    benchmark::DoNotOptimize(defect_supremum(g, u, v));
  }
}
BENCHMARK(BM_DefectSupremum)->Arg(8)->Arg(32)->Arg(128);

void BM_DecideUniqueness(benchmark::State& state) {
  // Metrizable by projection: replace weights with shortest-path distances.
  WeightedGraph raw = random_graph(static_cast<int>(state.range(0)), 0.25, 23);
  DistanceMatrix d = shortest_path_metric(raw);
  std::vector<EdgeSpec> edges;
  for (const auto& [a, b] : raw.edges()) {
    edges.push_back({raw.label(a), raw.label(b), d.at(a, b)});
  }
  WeightedGraph g = WeightedGraph::build(raw.labels(), edges);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_uniqueness(g, ContinuationMode::metric));
  }
}
BENCHMARK(BM_DecideUniqueness)->Arg(7)->Arg(9);

void BM_WitnessAlternative(benchmark::State& state) {
  WeightedGraph g = truncated_fan(static_cast<int>(state.range(0)));
  int u = g.index_of("u"), v = g.index_of("v");
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_alternative(g, u, v));
  }
}
BENCHMARK(BM_WitnessAlternative)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
