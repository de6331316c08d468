#include <doctest.h>

#include <random>

#include "metricext/metrizability.hpp"
#include "metricext/shortest_path.hpp"
#include "oracle.hpp"
#include "test_graphs.hpp"

using namespace metricext;
using fixtures::figure1;
using fixtures::triangle_511;

TEST_CASE("edge consistency") {
  WeightedGraph g = figure1();
  CHECK_FALSE(check_edge_consistency(g, shortest_path_metric(g)).has_value());

  WeightedGraph tri = triangle_511();
  auto violation = check_edge_consistency(tri, shortest_path_metric(tri));
  REQUIRE(violation.has_value());
  CHECK(tri.label(violation->u) == "a");
  CHECK(tri.label(violation->v) == "b");
  CHECK(violation->edge_weight == 5);
  CHECK(violation->distance == 2);

  WeightedGraph single = WeightedGraph::build({"a", "b"}, {{"a", "b", 3}});
  CHECK_FALSE(check_edge_consistency(single, shortest_path_metric(single)).has_value());
}

TEST_CASE("edge consistency rejects mismatched matrices") {
  WeightedGraph g = figure1();
  DistanceMatrix wrong({"a", "b"}, Provenance::user_supplied);
  CHECK_THROWS_AS(check_edge_consistency(g, wrong), Error);
}

TEST_CASE("cycle condition") {
  CHECK_FALSE(check_cycle_condition(figure1()).has_value());  // 2*5 <= 10, tight

  auto violation = check_cycle_condition(triangle_511());
  REQUIRE(violation.has_value());
  CHECK(violation->cycle.total_weight == 7);
  CHECK(violation->cycle.max_edge_weight == 5);

  CHECK_FALSE(check_cycle_condition(fixtures::path_abc()).has_value());
}

TEST_CASE("classify") {
  MetrizabilityVerdict fig1 = classify(figure1());
  CHECK(fig1.pseudometrizable);
  CHECK(fig1.metrizable);

  MetrizabilityVerdict tri = classify(triangle_511());
  CHECK_FALSE(tri.pseudometrizable);
  CHECK_FALSE(tri.metrizable);
  CHECK(tri.violating_edge.has_value());
  CHECK_FALSE(tri.zero_distance_pair.has_value());

  WeightedGraph zeros =
      WeightedGraph::build({"a", "b", "c"}, {{"a", "b", 0}, {"b", "c", 0}});
  MetrizabilityVerdict z = classify(zeros);
  CHECK(z.pseudometrizable);
  CHECK_FALSE(z.metrizable);
  REQUIRE(z.zero_distance_pair.has_value());
  CHECK(zeros.label(z.zero_distance_pair->first) == "a");
  CHECK(zeros.label(z.zero_distance_pair->second) == "b");

  CHECK_THROWS_AS(classify(WeightedGraph::build({"a", "b"}, {})), Error);
}

TEST_CASE("pseudometrizable weights agree with d_w on edges") {
  std::mt19937_64 rng(7);
  std::vector<Rational> grid{Rational(1, 4), Rational(1, 2), 1, 2};
  for (int trial = 0; trial < 30; ++trial) {
    WeightedGraph g = oracle::project_to_metrizable(
        oracle::random_connected_graph(rng, 2, 7, grid));
    MetrizabilityVerdict v = classify(g);
    REQUIRE(v.pseudometrizable);
    DistanceMatrix d = shortest_path_metric(g);
    for (const auto& [a, b] : g.edges()) {
      CHECK(d.at(a, b) == g.edge_weight(a, b));
    }
  }
}

TEST_CASE("the two characterizations agree on random graphs") {
  std::mt19937_64 rng(31337);
  std::vector<Rational> grid;
  grid.push_back(0);
  for (int k = 1; k <= 12; ++k) grid.push_back(Rational(k, 4));
  for (int trial = 0; trial < 120; ++trial) {
    WeightedGraph g = oracle::random_connected_graph(rng, 2, 7, grid);
    bool edge_ok = !check_edge_consistency(g, shortest_path_metric(g)).has_value();
    bool cycle_ok = !check_cycle_condition(g).has_value();
    CHECK(edge_ok == cycle_ok);
    // Certificates genuinely violate when re-evaluated from raw weights.
    if (auto c = check_cycle_condition(g)) {
      CHECK(2 * c->cycle.max_edge_weight > c->cycle.total_weight);
      CHECK_FALSE(oracle::cycles_ok(g));
    }
  }
}

TEST_CASE("verdicts are scale invariant") {
  std::mt19937_64 rng(99);
  std::vector<Rational> grid{0, Rational(1, 2), 1, Rational(5, 4), 3};
  std::vector<Rational> scales{Rational(1, 3), 2, Rational(7, 2)};
  for (int trial = 0; trial < 20; ++trial) {
    WeightedGraph g = oracle::random_connected_graph(rng, 2, 6, grid);
    bool base = classify(g).pseudometrizable;
    for (const Rational& lambda : scales) {
      std::vector<EdgeSpec> scaled;
      for (const auto& [a, b] : g.edges()) {
        scaled.push_back({g.label(a), g.label(b), lambda * g.edge_weight(a, b)});
      }
      WeightedGraph h = WeightedGraph::build(g.labels(), scaled);
      CHECK(classify(h).pseudometrizable == base);
    }
  }
}
