#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rwnet/error.hpp"
#include "rwnet/generator.hpp"
#include "rwnet/metrics.hpp"
#include "support/oracles.hpp"

namespace rwnet {
namespace {

using testing::square_with_diagonal;

TEST(ClusteringTest, LocalValues) {
  const Graph k3 = Graph::complete(3);
  for (NodeId v = 0; v < 3; ++v) EXPECT_DOUBLE_EQ(local_clustering(k3, v), 1.0);
  EXPECT_DOUBLE_EQ(local_clustering(Graph::path(3), 1), 0.0);
  EXPECT_DOUBLE_EQ(local_clustering(Graph::path(3), 0), 0.0);

  const Graph sq = square_with_diagonal();
  EXPECT_DOUBLE_EQ(local_clustering(sq, 0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(local_clustering(sq, 1), 1.0);
  EXPECT_THROW(local_clustering(sq, 4), InputError);
}

TEST(ClusteringTest, Averages) {
  EXPECT_DOUBLE_EQ(average_local_clustering(Graph::complete(3)), 1.0);
  EXPECT_NEAR(average_local_clustering(square_with_diagonal()), 5.0 / 6.0, 1e-15);
  EXPECT_DOUBLE_EQ(average_local_clustering(Graph::cycle(10)), 0.0);
  EXPECT_THROW(average_local_clustering(Graph{}), InputError);
}

TEST(TransitivityTest, Values) {
  EXPECT_DOUBLE_EQ(transitivity(Graph::complete(3)), 1.0);
  EXPECT_DOUBLE_EQ(transitivity(square_with_diagonal()), 0.75);
  EXPECT_DOUBLE_EQ(transitivity(Graph::star(4)), 0.0);
  EXPECT_DOUBLE_EQ(transitivity(Graph(3)), 0.0);
  EXPECT_EQ(triangle_count(square_with_diagonal()), 2u);
  EXPECT_THROW(transitivity(Graph{}), InputError);
}

TEST(TransitivityTest, EqualsAverageOnVertexTransitiveGraphs) {
  for (const Graph& g : {Graph::complete(4), Graph::complete(5), testing::petersen()}) {
    EXPECT_NEAR(average_local_clustering(g), transitivity(g), 1e-12);
  }
}

TEST(AsplTest, KnownValues) {
  EXPECT_DOUBLE_EQ(average_shortest_path(Graph::complete(2), AsplMode::exact()), 1.0);
  EXPECT_NEAR(average_shortest_path(Graph::cycle(10), AsplMode::exact()), 25.0 / 9.0, 1e-15);
  EXPECT_NEAR(average_shortest_path(Graph::path(3), AsplMode::exact()), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(average_shortest_path(square_with_diagonal(), AsplMode::exact()), 7.0 / 6.0, 1e-15);
}

TEST(AsplTest, DisconnectedReportsUnreachablePairs) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  try {
    average_shortest_path(g, AsplMode::exact());
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("4 unreachable"), std::string::npos) << e.what();
  }
}

TEST(AsplTest, SampledWithAllSourcesIsExact) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_connected_graph(10 + rng() % 40, 0.1, rng);
    const double exact = average_shortest_path(g, AsplMode::exact());
    EXPECT_NEAR(average_shortest_path(g, AsplMode::sampled(g.node_count(), {rng()})), exact, 1e-12);
    EXPECT_NEAR(average_shortest_path(g, AsplMode::sampled(10 * g.node_count(), {1})), exact, 1e-12);
  }
}

TEST(AsplTest, ThreadCountDoesNotChangeResult) {
  GenParams p;
  p.nodes_to_add = 1500;
  p.marks_per_step = 3;
  p.seed = {5};
  const Graph g = generate(p);
  const double one = average_shortest_path(g, AsplMode::sampled(200, {9}), 1);
  EXPECT_EQ(average_shortest_path(g, AsplMode::sampled(200, {9}), 3), one);
  EXPECT_EQ(average_shortest_path(g, AsplMode::exact(), 1),
            average_shortest_path(g, AsplMode::exact(), 4));
}

TEST(AsplTest, ModeParsing) {
  EXPECT_EQ(AsplMode::parse("exact").kind, AsplMode::Kind::exact);
  const auto s = AsplMode::parse("sampled:250");
  EXPECT_EQ(s.kind, AsplMode::Kind::sampled);
  EXPECT_EQ(s.sources, 250u);
  EXPECT_EQ(s.to_string(), "sampled:250");
  EXPECT_THROW(AsplMode::parse("sampled:0"), InputError);
  EXPECT_THROW(AsplMode::parse("sampled:"), InputError);
  EXPECT_THROW(AsplMode::parse("approx"), InputError);
  EXPECT_EQ(default_aspl_mode(20000).kind, AsplMode::Kind::exact);
  EXPECT_EQ(default_aspl_mode(20001).to_string(), "sampled:1000");
}

// Every measure against brute force on small random graphs.
TEST(OracleTest, SmallGraphsMatchBruteForce) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const double density = std::uniform_real_distribution<double>(0.0, 0.9)(rng);
    const Graph g = testing::random_connected_graph(n, density, rng);
    for (NodeId v = 0; v < n; ++v) {
      ASSERT_NEAR(local_clustering(g, v), testing::oracle_local_clustering(g, v), 1e-12);
    }
    ASSERT_NEAR(transitivity(g), testing::oracle_transitivity(g), 1e-12);
    ASSERT_NEAR(average_shortest_path(g, AsplMode::exact()), testing::oracle_aspl(g), 1e-12);
  }
}

TEST(PowerLawTest, ExactInverseSquare) {
  const auto h = DegreeHistogram::from_counts({{1, 64}, {2, 16}, {4, 4}});
  EXPECT_EQ(h.node_count(), 84u);
  EXPECT_NEAR(fit_power_law(h), -2.0, 1e-9);
}

TEST(PowerLawTest, FlatDistribution) {
  EXPECT_NEAR(fit_power_law(DegreeHistogram::from_counts({{1, 10}, {2, 10}})), 0.0, 1e-15);
}

TEST(PowerLawTest, RecoversExactExponent) {
  // Degrees 2^i with counts 2^(b (6 - i)) lie exactly on P(k) ~ k^-b.
  for (int b : {1, 2, 3}) {
    std::map<std::size_t, std::size_t> counts;
    for (int i = 0; i <= 6; ++i) counts[std::size_t{1} << i] = std::size_t{1} << (b * (6 - i));
    EXPECT_NEAR(fit_power_law(DegreeHistogram::from_counts(counts)), -b, 1e-9);
  }
}

TEST(PowerLawTest, ScaleInvariant) {
  const std::map<std::size_t, std::size_t> base = {{1, 50}, {2, 20}, {3, 9}, {5, 3}, {9, 1}};
  const double slope = fit_power_law(DegreeHistogram::from_counts(base));
  for (std::size_t c : {2u, 7u, 1000u}) {
    auto scaled = base;
    for (auto& [k, n] : scaled) n *= c;
    EXPECT_NEAR(fit_power_law(DegreeHistogram::from_counts(scaled)), slope, 1e-12);
  }
}

TEST(PowerLawTest, ZeroDegreeCountedButNotFitted) {
  const auto h = DegreeHistogram::from_counts({{0, 16}, {1, 64}, {2, 16}, {4, 4}});
  EXPECT_EQ(h.node_count(), 100u);
  EXPECT_EQ(h.entries().size(), 3u);
  EXPECT_NEAR(fit_power_law(h), -2.0, 1e-9);
  EXPECT_THROW(fit_power_law(DegreeHistogram::from_counts({{3, 5}})), InputError);
}

TEST(MeasureTest, SquareWithDiagonal) {
  const auto m = measure(square_with_diagonal(), AsplMode::exact());
  EXPECT_NEAR(m.avg_local_clustering, 5.0 / 6.0, 1e-12);
  EXPECT_DOUBLE_EQ(m.transitivity, 0.75);
  EXPECT_NEAR(m.avg_shortest_path, 7.0 / 6.0, 1e-12);
  EXPECT_EQ(m.max_degree, 3u);
  EXPECT_EQ(m.node_count, 4u);
  EXPECT_EQ(m.edge_count, 5u);
}

TEST(MeasureTest, CycleAndTriangle) {
  const auto c = measure(Graph::cycle(10), AsplMode::exact());
  EXPECT_EQ(c.avg_local_clustering, 0.0);
  EXPECT_EQ(c.transitivity, 0.0);
  EXPECT_NEAR(c.avg_shortest_path, 25.0 / 9.0, 1e-12);
  EXPECT_EQ(c.max_degree, 2u);
  EXPECT_TRUE(std::isnan(c.gamma));

  const auto k = measure(Graph::complete(3), AsplMode::exact());
  EXPECT_EQ(k.avg_local_clustering, 1.0);
  EXPECT_EQ(k.transitivity, 1.0);
  EXPECT_EQ(k.avg_shortest_path, 1.0);
  EXPECT_EQ(k.max_degree, 2u);
}

TEST(MeasureTest, AgreesWithIndividualOperations) {
  GenParams p;
  p.nodes_to_add = 800;
  p.marks_per_step = 4;
  p.seed = {31};
  const Graph g = generate(p);
  const auto m = measure(g, AsplMode::exact());
  EXPECT_NEAR(m.avg_local_clustering, average_local_clustering(g), 1e-12);
  EXPECT_NEAR(m.transitivity, transitivity(g), 1e-12);
  EXPECT_NEAR(m.gamma, fit_power_law(DegreeHistogram::of(g)), 1e-12);
  EXPECT_LE(m.max_degree, g.node_count() - 1);
  EXPECT_GE(m.avg_local_clustering, 0.0);
  EXPECT_LE(m.avg_local_clustering, 1.0);
  EXPECT_THROW(measure(Graph::complete(2), AsplMode::exact()), InputError);
}

// Spread of the sampled estimator on a 10k-node graph, then one exact check
// on a 5k-node graph.
TEST(SampledAsplTest, LowSpreadAndUnbiased) {
  GenParams p;
  p.nodes_to_add = 10000;
  p.marks_per_step = 5;
  p.seed = {17};
  const Graph big = generate(p);
  std::vector<double> estimates;
  for (std::uint64_t s = 0; s < 20; ++s) {
    estimates.push_back(average_shortest_path(big, AsplMode::sampled(1000, {mix_seed(3, s)})));
  }
  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= static_cast<double>(estimates.size());
  double var = 0.0;
  for (double e : estimates) var += (e - mean) * (e - mean);
  const double sd = std::sqrt(var / static_cast<double>(estimates.size() - 1));
  EXPECT_LT(sd, 0.01 * mean);

  p.nodes_to_add = 5000;
  const Graph mid = generate(p);
  const double exact = average_shortest_path(mid, AsplMode::exact());
  const double sampled = average_shortest_path(mid, AsplMode::sampled(1000, {4}));
  EXPECT_NEAR(sampled, exact, 0.01 * exact);
}

}  // namespace
}  // namespace rwnet
