#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "thx/recurs.hpp"

using namespace thx;

namespace {

std::vector<HValue> by_label(const TemporalGraph& g, const std::vector<HValue>& values) {
  std::vector<HValue> out;
  for (const auto& l : fixture::kToy10Nodes) out.push_back(values[fixture::id(g, l)]);
  return out;
}

}  // namespace

TEST(Recurs, ToyTenOutwardRows) {
  auto g = fixture::toy10();
  for (std::size_t n = 0; n < fixture::kToy10Outward.size(); ++n) {
    const auto& r = fixture::kToy10Outward[n];
    EXPECT_EQ(by_label(g, recurs_compute(g, n, Direction::kOut)),
              std::vector<HValue>(r.begin(), r.end()))
        << "order " << n;
  }
  EXPECT_EQ(recurs_compute(g, 5, Direction::kOut), std::vector<HValue>(10, 0));
}

TEST(Recurs, PathByHand) {
  auto g = load_edge_stream_from_string("a b 1\nb c 2\n");
  EXPECT_EQ(recurs_compute(g, 0, Direction::kOut)[0], 1u);
  EXPECT_EQ(recurs_compute(g, 1, Direction::kOut)[0], 1u);
  EXPECT_EQ(recurs_compute(g, 2, Direction::kOut)[0], 0u);
  // Arrival at c is 3; inward from c: c <- b at 2 <- a at 1.
  EXPECT_EQ(recurs_compute(g, 1, Direction::kIn)[2], 1u);
  EXPECT_EQ(recurs_compute(g, 2, Direction::kIn)[2], 0u);
}

TEST(Recurs, EmptyAndEdgeless) {
  EXPECT_EQ(recurs_compute(TemporalGraph(3, {}), 2, Direction::kOut),
            std::vector<HValue>(3, 0));
  EXPECT_TRUE(recurs_compute(TemporalGraph(), 2, Direction::kIn).empty());
}

TEST(Recurs, OrderZeroIsDegree) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(rng, 12, 60, 20, 3);
    auto out = recurs_compute(g, 0, Direction::kOut);
    auto in = recurs_compute(g, 0, Direction::kIn);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      EXPECT_EQ(out[v], g.out_degree_at(v, 0));
      EXPECT_EQ(in[v], g.in_degree_at(v, kInfinity));
    }
  }
}

TEST(Recurs, MatchesDefinitionWithIndividualLambdas) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 150; ++i) {
    auto g = oracle::random_graph(rng, 10, 50, 20, 4);
    for (auto dir : {Direction::kOut, Direction::kIn}) {
      oracle::TemporalH ref(g, dir == Direction::kOut);
      RecursEngine engine(g, dir, 6);
      for (std::size_t n = 0; n <= 6; ++n) {
        auto got = recurs_compute(g, n, dir);
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
          ASSERT_EQ(got[v], ref.root(v, n)) << "graph " << i << " node " << v << " n " << n;
          EXPECT_EQ(engine.root_value(v, n), got[v]);
        }
      }
      for (NodeId v = 0; v < g.num_nodes(); ++v)
        for (Time t : {0, 3, 7, 12, 19, 30})
          EXPECT_EQ(engine.value(v, t, 3), ref.value(v, t, 3));
    }
  }
}

TEST(Recurs, MemoizationDoesNotChangeResults) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(rng, 8, 30, 15, 2);
    for (auto dir : {Direction::kOut, Direction::kIn})
      for (std::size_t n = 0; n <= 5; ++n) {
        std::size_t with = 0, without = 0;
        auto a = recurs_compute(g, n, dir, {true}, &with);
        auto b = recurs_compute(g, n, dir, {false}, &without);
        EXPECT_EQ(a, b);
        EXPECT_EQ(without, 0u);
      }
  }
}

TEST(Recurs, DeepOrderDoesNotOverflowStack) {
  // A long chain has temporal walks of length 2000.
  std::vector<TemporalEdge> es;
  for (NodeId i = 0; i + 1 < 2001; ++i) es.push_back({i, i + 1, static_cast<Time>(i + 1), 1});
  TemporalGraph g(2001, es);
  auto v = recurs_compute(g, 1999, Direction::kOut);
  EXPECT_EQ(v[0], 1u);
  EXPECT_EQ(v[1], 0u);
  EXPECT_EQ(recurs_compute(g, 2000, Direction::kOut)[0], 0u);
}
