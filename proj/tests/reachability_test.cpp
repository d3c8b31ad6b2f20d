#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "thx/error.hpp"
#include "thx/reachability.hpp"
#include "thx/recurs.hpp"

using namespace thx;

TEST(ReachabilityTree, ToyTenRootChildren) {
  auto g = fixture::toy10();
  auto tree = build_reachability_tree(g, fixture::id(g, "f"), Direction::kOut, 2);
  EXPECT_EQ(tree.root.label, (NodeTime{fixture::id(g, "f"), 0}));
  std::multiset<std::pair<std::string, Time>> kids;
  for (auto& c : tree.root.children) kids.insert({g.label(c.label.node), c.label.time});
  EXPECT_EQ(kids, (std::multiset<std::pair<std::string, Time>>{
                      {"d", 2}, {"e", 2}, {"h", 2}, {"g", 2}}));
  EXPECT_EQ(phi(tree, 1), 3u);
  EXPECT_EQ(phi(tree, 0), 4u);
}

TEST(ReachabilityTree, SmallCases) {
  auto g = load_edge_stream_from_string("a b 1\nb c 2\nd e 1\n");
  auto lone = build_reachability_tree(TemporalGraph(1, {}), 0, Direction::kOut, 3);
  EXPECT_EQ(lone.size, 1u);
  EXPECT_TRUE(lone.root.children.empty());

  auto chain = build_reachability_tree(g, 0, Direction::kOut, 5);
  ASSERT_EQ(chain.root.children.size(), 1u);
  EXPECT_EQ(chain.root.children[0].label, (NodeTime{1, 2}));
  ASSERT_EQ(chain.root.children[0].children.size(), 1u);
  EXPECT_EQ(chain.root.children[0].children[0].label, (NodeTime{2, 3}));
  EXPECT_EQ(chain.size, 3u);
  EXPECT_EQ(descendant_count(build_reachability_tree(g, 0, Direction::kOut, 2), 1), 2u);
  EXPECT_EQ(phi(chain, 4), 0u);

  auto in = build_reachability_tree(g, 2, Direction::kIn, 3);
  EXPECT_EQ(in.root.label.time, kInfinity);
  ASSERT_EQ(in.root.children.size(), 1u);
  EXPECT_EQ(in.root.children[0].label, (NodeTime{1, 2}));

  EXPECT_THROW(phi(build_reachability_tree(g, 0, Direction::kOut, 1), 1), PreconditionError);
}

TEST(ReachabilityTree, Budget) {
  std::vector<TemporalEdge> es;
  for (Time t = 1; t <= 30; ++t) {
    es.push_back({0, 1, t, 1});
    es.push_back({1, 0, t, 1});
  }
  TemporalGraph g(2, es);
  EXPECT_THROW(build_reachability_tree(g, 0, Direction::kOut, 30, 1000), BudgetExceededError);
}

TEST(ReachabilityTree, PhiMatchesRecursion) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(rng, 10, 40, 20, 2);
    for (auto dir : {Direction::kOut, Direction::kIn}) {
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        auto tree = build_reachability_tree(g, v, dir, 6);
        for (std::size_t n = 0; n <= 5; ++n) {
          const HValue h = recurs_compute(g, n, dir)[v];
          EXPECT_EQ(phi(tree, n), h);
          if (h >= 2) {
            double bound = (std::pow(h, n + 2) - h) / (h - 1.0);
            EXPECT_GE(static_cast<double>(descendant_count(tree, n)), bound);
          } else if (h == 1) {
            EXPECT_GE(descendant_count(tree, n), n + 1);
          }
        }
      }
    }
  }
}

TEST(Reaches, ToyFiveDirectionality) {
  auto g = fixture::toy5();
  const NodeId a = fixture::id(g, "a"), c = fixture::id(g, "c");
  EXPECT_TRUE(reaches(g, a, c));
  // The only a-b contacts end before b meets c.
  TemporalGraph without_ac(g.num_nodes(), [&] {
    std::vector<TemporalEdge> es;
    for (auto& e : g.edges())
      if (!((e.u == a && e.v == c) || (e.u == c && e.v == a))) es.push_back(e);
    return es;
  }());
  EXPECT_FALSE(reaches(restrict_interval(without_ac, 2, kInfinity), c, a));
  EXPECT_TRUE(reaches(restrict_interval(without_ac, 2, kInfinity), a, c));
}

TEST(Reaches, DirectedFlowBlockedBackwards) {
  auto g = load_edge_stream_from_string("a b 2\nb c 4\nc b 5\nb a 3\n");
  EXPECT_TRUE(reaches(g, 0, 2));
  EXPECT_FALSE(reaches(g, 2, 0));
}

TEST(Reaches, SelfAndEdgeless) {
  TemporalGraph g(3, {});
  for (NodeId u = 0; u < 3; ++u)
    for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(reaches(g, u, v), u == v);
}

TEST(Reaches, MatchesWalkEnumeration) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_graph(rng, 10, 30, 20, 3);
    for (NodeId s = 0; s < g.num_nodes(); ++s)
      EXPECT_EQ(reachable_from(g, s), oracle::reachable(g, s));
  }
}

TEST(TemporalDiameter, Examples) {
  EXPECT_EQ(temporal_diameter(load_edge_stream_from_string("a b 1\nb c 2\n")), 2u);
  EXPECT_EQ(temporal_diameter(load_edge_stream_from_string("a b 1\n")), 1u);
  EXPECT_EQ(temporal_diameter(TemporalGraph(3, {})), 0u);
  EXPECT_EQ(temporal_diameter(load_edge_stream_from_string("a b 1\nb c 1\n")), 1u);
  EXPECT_EQ(temporal_diameter(load_edge_stream_from_string("a b 1 3\nb c 3\nb c 4\n")), 2u);
}

TEST(TemporalDiameter, MatchesBruteForceAndBoundsIndex) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_graph(rng, 12, 60, 20, 3);
    const std::size_t d = temporal_diameter(g);
    EXPECT_EQ(d, oracle::diameter(g));
    for (auto dir : {Direction::kOut, Direction::kIn})
      EXPECT_EQ(recurs_compute(g, d + 1, dir), std::vector<HValue>(g.num_nodes(), 0));
  }
}

TEST(ReachScores, Examples) {
  TemporalGraph edgeless(4, {});
  std::vector<NodeId> everyone = {0, 1, 2, 3};
  auto s = reach_scores(edgeless, everyone);
  EXPECT_DOUBLE_EQ(s.global, 0.25);
  EXPECT_DOUBLE_EQ(s.local, 0.25);

  auto clique = load_edge_stream_from_string("a b 1\nb a 1\na c 1\nc a 1\nb c 1\nc b 1\n");
  auto full = reach_scores(clique, std::vector<NodeId>{0, 1, 2});
  EXPECT_DOUBLE_EQ(full.global, 1.0);
  EXPECT_DOUBLE_EQ(full.local, 1.0);

  auto g = load_edge_stream_from_string("a b 1\nb c 2\n");
  EXPECT_DOUBLE_EQ(reach_scores(g, std::vector<NodeId>{2}).local, 1.0);
  EXPECT_THROW(reach_scores(g, std::vector<NodeId>{}), PreconditionError);
}

TEST(ReachScores, MatchBruteForce) {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_graph(rng, 10, 30, 20, 2);
    std::vector<std::vector<bool>> r;
    for (NodeId s = 0; s < g.num_nodes(); ++s) r.push_back(oracle::reachable(g, s));
    std::vector<NodeId> core;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
      if (rng() % 2 == 0) core.push_back(v);
    if (core.empty()) core.push_back(0);
    double gsum = 0, lsum = 0;
    for (auto u : core) {
      for (NodeId v = 0; v < g.num_nodes(); ++v) gsum += r[u][v];
      for (auto v : core) lsum += r[u][v];
    }
    auto s = reach_scores(g, core);
    EXPECT_DOUBLE_EQ(s.global, gsum / (core.size() * g.num_nodes()));
    EXPECT_DOUBLE_EQ(s.local, lsum / (core.size() * core.size()));

    std::vector<NodeId> all(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) all[v] = v;
    auto whole = reach_scores(g, all);
    EXPECT_DOUBLE_EQ(whole.global, whole.local);
  }
}
