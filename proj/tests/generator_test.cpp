#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "rwnet/edge_list.hpp"
#include "rwnet/error.hpp"
#include "rwnet/generator.hpp"
#include "rwnet/metrics.hpp"
#include "support/oracles.hpp"

namespace rwnet {
namespace {

GenParams small_params(std::size_t n, std::size_t m, double p1, std::uint64_t seed) {
  GenParams p;
  p.nodes_to_add = n;
  p.marks_per_step = m;
  p.p1 = p1;
  p.seed = RngSeed{seed};
  return p;
}

TEST(RandomWalkTest, SingleStepsOnK2MarkBothEnds) {
  const Graph k2 = Graph::complete(2);
  RandomEngine rng = make_engine({1});
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(run_random_walk(k2, 0, 1.0, 2, rng), (std::vector<NodeId>{0, 1}));
  }
}

TEST(RandomWalkTest, TwoStepsOnK2ReturnToStart) {
  const Graph k2 = Graph::complete(2);
  RandomEngine rng = make_engine({2});
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(run_random_walk(k2, 0, 0.0, 3, rng), (std::vector<NodeId>{0}));
  }
}

TEST(RandomWalkTest, MarkedSetShape) {
  std::mt19937_64 gen(3);
  RandomEngine rng = make_engine({3});
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_connected_graph(2 + gen() % 20, 0.15, gen);
    const NodeId start = static_cast<NodeId>(gen() % g.node_count());
    const std::size_t m = 1 + gen() % 8;
    const auto marked = run_random_walk(g, start, 0.5, m, rng);
    ASSERT_FALSE(marked.empty());
    EXPECT_EQ(marked.front(), start);
    EXPECT_LE(marked.size(), m);
    std::set<NodeId> unique(marked.begin(), marked.end());
    EXPECT_EQ(unique.size(), marked.size());
  }
}

TEST(RandomWalkTest, RejectsBadStart) {
  RandomEngine rng = make_engine({4});
  EXPECT_THROW(run_random_walk(Graph::cycle(5), 5, 0.5, 3, rng), InputError);
}

TEST(FindNodeTest, CycleAntipode) {
  const Graph c10 = Graph::cycle(10);
  RandomEngine rng = make_engine({5});
  BfsWorkspace bfs;
  for (int i = 0; i < 10; ++i) EXPECT_EQ(find_node_at_distance(c10, 0, 5, rng, bfs), 5u);
}

TEST(FindNodeTest, CycleRingIsUniform) {
  const Graph c10 = Graph::cycle(10);
  RandomEngine rng = make_engine({6});
  BfsWorkspace bfs;
  constexpr int kDraws = 20000;
  int threes = 0;
  for (int i = 0; i < kDraws; ++i) {
    const auto t = find_node_at_distance(c10, 0, 3, rng, bfs);
    ASSERT_TRUE(t == 3u || t == 7u);
    threes += *t == 3u;
  }
  // 3 sigma of Binomial(20000, 1/2) / 20000.
  EXPECT_NEAR(threes / double(kDraws), 0.5, 0.0107);
}

TEST(FindNodeTest, FallsBackToFarthestRing) {
  const Graph p4 = Graph::path(4);
  RandomEngine rng = make_engine({7});
  BfsWorkspace bfs;
  EXPECT_EQ(find_node_at_distance(p4, 0, 7, rng, bfs), 3u);
  EXPECT_EQ(find_node_at_distance(p4, 1, 7, rng, bfs), 3u);
}

TEST(FindNodeTest, NothingBeyondOneHop) {
  RandomEngine rng = make_engine({8});
  BfsWorkspace bfs;
  EXPECT_FALSE(find_node_at_distance(Graph::complete(3), 0, 2, rng, bfs));
  EXPECT_FALSE(find_node_at_distance(Graph::star(5), 0, 3, rng, bfs));
}

TEST(ShortcutTest, TriangleGetsNoShortcut) {
  Graph k3 = Graph::complete(3);
  const DistanceDistribution dist(2);
  RandomEngine rng = make_engine({9});
  BfsWorkspace bfs;
  for (int i = 0; i < 10; ++i) EXPECT_FALSE(add_shortcut_edge(k3, dist, rng, bfs));
  EXPECT_EQ(k3.edge_count(), 3u);
}

TEST(ShortcutTest, EndpointsAtLeastTwoHopsApart) {
  std::mt19937_64 gen(10);
  RandomEngine rng = make_engine({10});
  BfsWorkspace bfs;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testing::random_connected_graph(3 + gen() % 15, 0.1, gen);
    const auto before = testing::floyd_warshall(g);
    const auto dist = build_distance_distribution(g);
    const std::size_t edges = g.edge_count();
    std::uint32_t d = 0;
    const auto e = add_shortcut_edge(g, dist, rng, bfs, &d);
    if (!e) {
      EXPECT_EQ(g.edge_count(), edges);
      continue;
    }
    const auto [s, t] = *e;
    EXPECT_GE(before[s][t], 2u);
    EXPECT_LE(before[s][t], d);
    EXPECT_EQ(g.edge_count(), edges + 1);
  }
}

TEST(InitialGraphTest, ParseAndPrint) {
  EXPECT_EQ(InitialGraphSpec::parse("cycle:10"), InitialGraphSpec::cycle(10));
  EXPECT_EQ(InitialGraphSpec::parse("complete:5"), InitialGraphSpec::complete(5));
  EXPECT_EQ(InitialGraphSpec::parse("file:/tmp/x.edges").path, "/tmp/x.edges");
  EXPECT_EQ(InitialGraphSpec::complete(5).to_string(), "complete:5");
  EXPECT_THROW(InitialGraphSpec::parse("ring:4"), InputError);
  EXPECT_THROW(InitialGraphSpec::parse("cycle:x"), InputError);
  EXPECT_THROW(InitialGraphSpec::parse("cycle"), InputError);
}

TEST(InitialGraphTest, FileMustBeConnected) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = dir / "rwnet_initial_good.edges";
  const auto bad = dir / "rwnet_initial_bad.edges";
  save_edge_list(good, Graph::path(5));
  {
    std::ofstream out(bad);
    out << "0 1\n2 3\n";
  }
  EXPECT_EQ(InitialGraphSpec::file(good.string()).build().edge_count(), 4u);
  EXPECT_THROW(InitialGraphSpec::file(bad.string()).build(), InputError);
  EXPECT_THROW(InitialGraphSpec::cycle(2).build(), InputError);
}

TEST(GenParamsTest, Validation) {
  EXPECT_NO_THROW(small_params(1, 1, 0.0, 0).validate());
  EXPECT_THROW(small_params(0, 1, 0.5, 0).validate(), InputError);
  EXPECT_THROW(small_params(5, 0, 0.5, 0).validate(), InputError);
  EXPECT_THROW(small_params(5, 2, 1.01, 0).validate(), InputError);
  auto p = small_params(5, 2, 0.5, 0);
  p.beta = 1.0;
  EXPECT_THROW(p.validate(), InputError);
  EXPECT_THROW(generate(small_params(0, 1, 0.5, 0)), InputError);
}

TEST(GenerateTest, SingleIterationFromCycle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::vector<IterationEvent> events;
    const Graph g = generate(small_params(1, 1, 0.5, seed),
                             [&](const IterationEvent& e) { events.push_back(e); });
    EXPECT_EQ(g.node_count(), 11u);
    EXPECT_GE(g.edge_count(), 11u);
    EXPECT_LE(g.edge_count(), 12u);
    ASSERT_EQ(events.size(), 1u);
    // 11 nodes, 11 edges: average degree 2, so the fallback bound 10 applies.
    EXPECT_TRUE(events[0].diameter_fallback);
    EXPECT_EQ(events[0].max_distance, 10u);
    EXPECT_EQ(g.edge_count(), 11u + (events[0].shortcut ? 1u : 0u));
  }
}

TEST(GenerateTest, StructuralInvariantsOverRandomParams) {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    GenParams p = small_params(1 + gen() % 300, 1 + gen() % 6, (gen() % 11) / 10.0, gen());
    p.special_edges = gen() % 4 != 0;
    if (gen() % 3 == 0) p.initial = InitialGraphSpec::complete(3 + gen() % 5);
    const Graph initial = p.initial.build();
    const Graph g = generate(p);
    const std::size_t n = p.nodes_to_add;
    const std::size_t m = p.marks_per_step;
    ASSERT_EQ(g.node_count(), initial.node_count() + n);
    ASSERT_GE(g.edge_count(), initial.edge_count() + n);
    ASSERT_LE(g.edge_count(), initial.edge_count() + n * (m + 1));
    if (!p.special_edges) ASSERT_LE(g.edge_count(), initial.edge_count() + n * m);
    ASSERT_TRUE(is_connected(g));
    ASSERT_TRUE(testing::is_simple_undirected(g));
    ASSERT_EQ(generate(p), g) << "non-deterministic for seed " << p.seed.value;
  }
}

TEST(GenerateTest, EventLogAccountsForEveryEdge) {
  GenParams p = small_params(400, 4, 0.4, 77);
  const Graph initial = p.initial.build();
  std::set<std::pair<NodeId, NodeId>> expected;
  for (auto e : initial.edges()) expected.insert(e);
  NodeId next_node = static_cast<NodeId>(initial.node_count());
  const Graph g = generate(p, [&](const IterationEvent& e) {
    ASSERT_EQ(e.new_node, next_node++);
    ASSERT_EQ(e.marked.front(), e.walk_start);
    for (NodeId u : e.marked) {
      ASSERT_LT(u, e.new_node);
      expected.insert({u, e.new_node});
    }
    if (e.shortcut) {
      auto [s, t] = *e.shortcut;
      expected.insert({std::min(s, t), std::max(s, t)});
    }
  });
  const auto actual = g.edges();
  const std::set<std::pair<NodeId, NodeId>> actual_set(actual.begin(), actual.end());
  EXPECT_EQ(actual_set, expected);
  EXPECT_EQ(actual.size(), expected.size());
}

TEST(GenerateTest, BaselineNeverLinksExistingNodes) {
  GenParams p = small_params(500, 3, 0.5, 8);
  p.special_edges = false;
  std::size_t walk_edges = 0;
  const Graph g = generate(p, [&](const IterationEvent& e) {
    EXPECT_FALSE(e.shortcut);
    EXPECT_EQ(e.max_distance, 0u);
    walk_edges += e.marked.size();
  });
  EXPECT_EQ(g.edge_count(), 10u + walk_edges);
}

TEST(GenerateTest, SeedsDiffer) {
  EXPECT_NE(generate(small_params(200, 3, 0.5, 1)), generate(small_params(200, 3, 0.5, 2)));
}

TEST(GenerateTest, BaselineDegreeTailEmerges) {
  GenParams p = small_params(20000, 2, 0.5, 21);
  p.special_edges = false;
  const double gamma = fit_power_law(DegreeHistogram::of(generate(p)));
  EXPECT_LT(gamma, -1.5);
}

}  // namespace
}  // namespace rwnet
