#include <doctest.h>

#include <random>

#include "metricext/extensions.hpp"
#include "metricext/shortest_path.hpp"
#include "oracle.hpp"
#include "test_graphs.hpp"

using namespace metricext;
using fixtures::figure1;
using fixtures::path_abc;

namespace {

DistanceMatrix edited(const DistanceMatrix& base, int i, int j, const Rational& v) {
  DistanceMatrix out(base.labels(), Provenance::user_supplied);
  for (int a = 0; a < base.size(); ++a) {
    for (int b = a + 1; b < base.size(); ++b) out.set(a, b, base.at(a, b));
  }
  out.set(i, j, v);
  return out;
}

}  // namespace

TEST_CASE("verify_extension accepts d_w") {
  WeightedGraph g = figure1();
  CHECK(verify_extension(g, shortest_path_metric(g), ContinuationMode::metric).ok);
}

TEST_CASE("verify_extension catches a broken triangle") {
  WeightedGraph g = figure1();
  DistanceMatrix d = shortest_path_metric(g);
  int u = g.index_of("u"), v = g.index_of("v");

  VerificationResult too_big =
      verify_extension(g, edited(d, u, v, 10), ContinuationMode::metric);
  CHECK_FALSE(too_big.ok);
  CHECK(*too_big.failure == AxiomFailure::triangle);

  // Any value below d_w(u,v) = 4 breaks the triangle through t, because
  // q(u-t-v) = 4 forces the pair: d(u,t) = 5 > d(u,v) + d(v,t).
  VerificationResult lowered =
      verify_extension(g, edited(d, u, v, Rational(7, 2)), ContinuationMode::metric);
  CHECK_FALSE(lowered.ok);
  CHECK(*lowered.failure == AxiomFailure::triangle);
}

TEST_CASE("verify_extension catches edge disagreement and zero distances") {
  WeightedGraph g = path_abc();
  DistanceMatrix d = shortest_path_metric(g);

  VerificationResult bad_edge =
      verify_extension(g, edited(d, g.index_of("a"), g.index_of("b"), 9),
                       ContinuationMode::metric);
  CHECK_FALSE(bad_edge.ok);
  CHECK((*bad_edge.failure == AxiomFailure::triangle ||
         *bad_edge.failure == AxiomFailure::edge_disagreement));

  WeightedGraph zeros = WeightedGraph::build({"a", "b"}, {{"a", "b", 0}});
  DistanceMatrix dz = shortest_path_metric(zeros);
  CHECK(verify_extension(zeros, dz, ContinuationMode::pseudometric).ok);
  VerificationResult as_metric = verify_extension(zeros, dz, ContinuationMode::metric);
  CHECK_FALSE(as_metric.ok);
  CHECK(*as_metric.failure == AxiomFailure::zero_distance);
}

TEST_CASE("verify_extension rejects wrong dimensions") {
  DistanceMatrix wrong({"x", "y"}, Provenance::user_supplied);
  CHECK_THROWS_AS(verify_extension(figure1(), wrong, ContinuationMode::metric), Error);
}

TEST_CASE("compare_extensions") {
  WeightedGraph g = figure1();
  DistanceMatrix d = shortest_path_metric(g);
  CHECK(compare_extensions(d, d).relation == OrderRelation::equal);

  DistanceMatrix lower = edited(d, g.index_of("s"), g.index_of("t"), 2);
  ExtensionComparison cmp = compare_extensions(lower, d);
  CHECK(cmp.relation == OrderRelation::less_or_equal);
  CHECK(cmp.deceeds_pair.has_value());
  CHECK(compare_extensions(d, lower).relation == OrderRelation::greater_or_equal);
}

TEST_CASE("incomparable witnesses on a path graph") {
  WeightedGraph g = WeightedGraph::build(
      {"a", "b", "c", "d"}, {{"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}});
  DistanceMatrix w1 = witness_alternative(g, g.index_of("a"), g.index_of("c"));
  DistanceMatrix w2 = witness_alternative(g, g.index_of("b"), g.index_of("d"));
  ExtensionComparison cmp = compare_extensions(w1, w2);
  CHECK(cmp.relation == OrderRelation::incomparable);
  CHECK(cmp.exceeds_pair.has_value());
  CHECK(cmp.deceeds_pair.has_value());
}

TEST_CASE("greatest_extension") {
  WeightedGraph g = figure1();
  DistanceMatrix d = greatest_extension(g);
  CHECK(d.at(g.index_of("u"), g.index_of("v")) == 4);
  CHECK(d.at(g.index_of("s"), g.index_of("t")) == 3);

  // Complete graph: the matrix is the weight itself.
  WeightedGraph k3 = WeightedGraph::build({"a", "b", "c"},
                                          {{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}});
  DistanceMatrix dk = greatest_extension(k3);
  for (const auto& [a, b] : k3.edges()) CHECK(dk.at(a, b) == k3.edge_weight(a, b));

  WeightedGraph single = WeightedGraph::build({"a", "b"}, {{"a", "b", 7}});
  CHECK(greatest_extension(single).at(0, 1) == 7);

  CHECK_THROWS_AS(greatest_extension(fixtures::triangle_511()), Error);
  CHECK_THROWS_AS(greatest_extension(WeightedGraph::build({"a", "b"}, {})), Error);
}

TEST_CASE("witness_alternative on the path graph") {
  WeightedGraph g = path_abc();
  int a = g.index_of("a"), c = g.index_of("c");
  DistanceMatrix w = witness_alternative(g, a, c);
  CHECK(w.at(a, c) == 1);  // midpoint of (0, 2)
  CHECK(w.provenance() == Provenance::witness);
  CHECK(verify_extension(g, w, ContinuationMode::metric).ok);
  CHECK(compare_extensions(w, shortest_path_metric(g)).relation ==
        OrderRelation::less_or_equal);
}

TEST_CASE("witness_alternative on the truncated fan") {
  WeightedGraph g = fixtures::truncated_fan(2);
  int u = g.index_of("u"), v = g.index_of("v");
  DistanceMatrix w = witness_alternative(g, u, v);
  CHECK(w.at(u, v) == Rational(15, 4));  // midpoint of (7/2, 4)
  CHECK(verify_extension(g, w, ContinuationMode::metric).ok);
}

TEST_CASE("witness_alternative errors") {
  WeightedGraph g = figure1();
  CHECK_THROWS_AS(witness_alternative(g, g.index_of("u"), g.index_of("t")), Error);
  try {
    witness_alternative(g, g.index_of("u"), g.index_of("v"));
    FAIL("expected NoSlack");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_slack);
  }
}

TEST_CASE("augmented graphs stay metrizable") {
  std::mt19937_64 rng(8080);
  std::vector<Rational> grid{Rational(1, 2), 1, 2, 3};
  for (int trial = 0; trial < 15; ++trial) {
    WeightedGraph g = oracle::project_to_metrizable(
        oracle::random_connected_graph(rng, 3, 6, grid, 0.15));
    DistanceMatrix d = shortest_path_metric(g);
    for (int i = 0; i < g.vertex_count(); ++i) {
      for (int j = i + 1; j < g.vertex_count(); ++j) {
        if (g.has_edge(i, j)) continue;
        DefectReport r = detail::defect_supremum_with(g, d, i, j, kDefaultEnumerationCap);
        if (r.slack == 0) continue;
        Rational mid = (r.q_sup + r.d_value) / 2;
        WeightedGraph aug = g.with_edge(i, j, mid);
        CHECK(classify(aug).metrizable);
      }
    }
  }
}

TEST_CASE("sample_extensions") {
  SUBCASE("singleton poset") {
    auto fig1 = sample_extensions(figure1(), 5, 1);
    REQUIRE(fig1.size() == 1);
    CHECK(fig1[0] == shortest_path_metric(figure1()));

    WeightedGraph k3 = WeightedGraph::build(
        {"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}});
    CHECK(sample_extensions(k3, 4, 9).size() == 1);
  }

  SUBCASE("path graph yields several distinct verified extensions") {
    WeightedGraph g = path_abc();
    auto samples = sample_extensions(g, 3, 12345);
    CHECK(samples.size() >= 2);
    DistanceMatrix d = shortest_path_metric(g);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      CHECK(verify_extension(g, samples[i], ContinuationMode::metric).ok);
      auto rel = compare_extensions(samples[i], d).relation;
      CHECK((rel == OrderRelation::equal || rel == OrderRelation::less_or_equal));
      for (std::size_t j = i + 1; j < samples.size(); ++j) {
        CHECK_FALSE(samples[i] == samples[j]);
      }
    }
  }

  SUBCASE("determinism under a fixed seed") {
    WeightedGraph g = WeightedGraph::build(
        {"a", "b", "c", "d"}, {{"a", "b", 1}, {"b", "c", 2}, {"c", "d", 1}});
    auto s1 = sample_extensions(g, 4, 777);
    auto s2 = sample_extensions(g, 4, 777);
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i] == s2[i]);
  }
}

TEST_CASE("comparison behaves as a partial order on sampled sets") {
  WeightedGraph g = WeightedGraph::build(
      {"a", "b", "c", "d"}, {{"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}});
  auto samples = sample_extensions(g, 5, 3);
  for (const auto& x : samples) {
    CHECK(compare_extensions(x, x).relation == OrderRelation::equal);  // reflexive
    for (const auto& y : samples) {
      auto xy = compare_extensions(x, y).relation;
      auto yx = compare_extensions(y, x).relation;
      if (xy == OrderRelation::less_or_equal && yx == OrderRelation::less_or_equal) {
        CHECK(x == y);  // antisymmetric
      }
      for (const auto& z : samples) {
        auto yz = compare_extensions(y, z).relation;
        bool xy_le = xy == OrderRelation::less_or_equal || xy == OrderRelation::equal;
        bool yz_le = yz == OrderRelation::less_or_equal || yz == OrderRelation::equal;
        if (xy_le && yz_le) {
          auto xz = compare_extensions(x, z).relation;
          CHECK((xz == OrderRelation::less_or_equal || xz == OrderRelation::equal));
        }
      }
    }
  }
}
