#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "thx/error.hpp"
#include "thx/evaluation.hpp"
#include "thx/synthetic.hpp"

using namespace thx;

namespace {

std::vector<double> random_tied(std::mt19937_64& rng, std::size_t n, int levels) {
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(rng() % levels);
  return v;
}

}  // namespace

TEST(KendallTauB, Examples) {
  std::vector<double> a = {1, 2, 3, 4}, r = {4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(kendall_tau_b(a, a), 1.0);
  EXPECT_DOUBLE_EQ(kendall_tau_b(a, r), -1.0);
  std::vector<double> x = {1, 2, 2, 3}, y = {1, 3, 2, 2};
  EXPECT_NEAR(kendall_tau_b(x, y), oracle::tau_b(x, y), 1e-12);
  // C=3, D=1, one tie on each side: 2 / sqrt(5 * 5).
  EXPECT_NEAR(kendall_tau_b(x, y), 0.4, 1e-12);
}

TEST(KendallTauB, Errors) {
  std::vector<double> flat = {2, 2, 2}, ok = {1, 2, 3};
  EXPECT_THROW(kendall_tau_b(flat, ok), DegenerateRankingError);
  EXPECT_THROW(kendall_tau_b(ok, flat), DegenerateRankingError);
  std::vector<double> one = {1};
  EXPECT_THROW(kendall_tau_b(one, one), PreconditionError);
  std::vector<double> shorter = {1, 2};
  EXPECT_THROW(kendall_tau_b(ok, shorter), PreconditionError);
  std::vector<double> bad = {1, NAN, 3};
  EXPECT_THROW(kendall_tau_b(ok, bad), PreconditionError);
}

TEST(KendallTauB, MatchesPairCountOracle) {
  std::mt19937_64 rng(61);
  int checked = 0;
  while (checked < 1000) {
    const std::size_t n = 2 + rng() % 60;
    auto a = random_tied(rng, n, 1 + rng() % 8), b = random_tied(rng, n, 1 + rng() % 8);
    double got;
    try {
      got = kendall_tau_b(a, b);
    } catch (const DegenerateRankingError&) {
      continue;
    }
    EXPECT_NEAR(got, oracle::tau_b(a, b), 1e-12);
    EXPECT_NEAR(kendall_tau_b(b, a), got, 1e-12);
    EXPECT_GE(got, -1.0 - 1e-12);
    EXPECT_LE(got, 1.0 + 1e-12);
    EXPECT_NEAR(kendall_tau_b(a, a), 1.0, 1e-12);
    ++checked;
  }
}

TEST(Sir, ZeroBetaInfectsOnlySeed) {
  auto g = fixture::toy10();
  SirParams p;
  p.beta = 0.0;
  p.trials = 50;
  auto r = sir_ranking(g, p);
  for (double s : r.score) EXPECT_EQ(s, 1.0);
  TrialRng rng(1, 0, 0);
  EXPECT_EQ(sir_simulate(TemporalGraph(4, {}), 2, SirParams{}, rng), 1u);
}

TEST(Sir, DeterministicPathSpread) {
  auto g = load_edge_stream_from_string("a b 1\nb c 2\n");
  SirParams p;
  p.beta = 1.0;
  p.recovery_mean = 1e12;
  TrialRng rng(5, 0, 0);
  auto out = sir_run(g, 0, p, rng);
  EXPECT_EQ(out.influence, 3u);
  EXPECT_EQ(out.infected_at[1], 2.0);
  EXPECT_EQ(out.infected_at[2], 3.0);
  // Reverse order of contacts: b is infected only after b-c has passed.
  auto late = load_edge_stream_from_string("b c 1\na b 2\n");
  TrialRng rng2(5, 0, 0);
  EXPECT_EQ(sir_simulate(late, *late.find("a"), p, rng2), 2u);
}

TEST(Sir, ParameterValidation) {
  auto g = fixture::toy10();
  SirParams p;
  p.beta = 1.5;
  EXPECT_THROW(sir_ranking(g, p), PreconditionError);
  p = SirParams{};
  p.recovery_mean = 0;
  EXPECT_THROW(sir_ranking(g, p), PreconditionError);
  p = SirParams{};
  p.trials = 0;
  EXPECT_THROW(sir_ranking(g, p), PreconditionError);
}

TEST(Sir, Causality) {
  std::mt19937_64 gen(62);
  for (int i = 0; i < 50; ++i) {
    auto g = oracle::random_graph(gen, 20, 150, 60, 3);
    SirParams p;
    p.beta = 0.7;
    p.recovery_mean = 15;
    for (NodeId s = 0; s < g.num_nodes(); ++s) {
      TrialRng rng(9, s, i);
      auto out = sir_run(g, s, p, rng);
      std::size_t count = 0;
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (std::isinf(out.infected_at[v])) continue;
        ++count;
        EXPECT_GE(out.infected_at[v], out.infected_at[s]);
        EXPECT_GT(out.recovered_at[v], out.infected_at[v]);
        if (v == s) continue;
        const NodeId w = out.infector[v];
        const double ct = static_cast<double>(out.contact_time[v]);
        EXPECT_LE(out.infected_at[w], ct);
        EXPECT_LT(ct, out.recovered_at[w]);
        bool witnessed = false;
        for (auto& e : g.edges())
          witnessed |= e.u == w && e.v == v && e.t == out.contact_time[v] &&
                       static_cast<double>(e.arrival()) == out.infected_at[v];
        EXPECT_TRUE(witnessed);
      }
      EXPECT_EQ(count, out.influence);
    }
  }
}

TEST(Sir, ComponentContainment) {
  auto g = load_edge_stream_from_string("a b 1\nb c 2\nc a 3\nd e 1\ne d 2\n");
  SirParams p;
  p.beta = 0.9;
  p.trials = 200;
  auto r = sir_ranking(g, p);
  for (const char* l : {"a", "b", "c"}) EXPECT_LE(r.score[*g.find(l)], 3.0);
  for (const char* l : {"d", "e"}) EXPECT_LE(r.score[*g.find(l)], 2.0);
}

TEST(Sir, DeterministicAndThreadIndependent) {
  auto g = random_undirected_temporal_graph(40, 300, 100, 3);
  SirParams p;
  p.trials = 100;
  auto a = sir_ranking(g, p);
  setenv("THX_THREADS", "3", 1);
  auto b = sir_ranking(g, p);
  setenv("THX_THREADS", "1", 1);
  auto c = sir_ranking(g, p);
  unsetenv("THX_THREADS");
  EXPECT_EQ(a.score, b.score);
  EXPECT_EQ(a.score, c.score);
  p.rng_seed = 2;
  EXPECT_NE(sir_ranking(g, p).score, a.score);
}

TEST(Sir, MonotoneInBeta) {
  auto g = random_undirected_temporal_graph(50, 400, 200, 8);
  SirParams lo, hi;
  lo.beta = 0.2;
  hi.beta = 0.8;
  lo.trials = hi.trials = 1000;
  auto mean = [](const NodeRanking& r) {
    double s = 0;
    for (double x : r.score) s += x;
    return s / r.score.size();
  };
  EXPECT_GT(mean(sir_ranking(g, hi)), mean(sir_ranking(g, lo)));
}

TEST(TrialRng, Ranges) {
  TrialRng rng(1, 2, 3);
  double sum = 0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += rng.exponential(20.0);
  }
  EXPECT_NEAR(sum / 20000, 20.0, 1.0);
}

TEST(Heuristics, NamesAndOrderZero) {
  auto g = load_edge_stream_from_string("a b 1\na c 2\nb c 3\nd a 4\n");
  std::vector<std::size_t> ns = {0, 2};
  auto hs = heuristic_rankings(g, ns);
  ASSERT_EQ(hs.size(), 5u);
  EXPECT_EQ(hs[0].name, "thi_n0");
  EXPECT_EQ(hs[1].name, "thi_n2");
  EXPECT_EQ(hs[2].name, "degree");
  EXPECT_EQ(hs[3].name, "h_index");
  EXPECT_EQ(hs[4].name, "k_core");
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    EXPECT_EQ(hs[0].ranking.score[v], static_cast<double>(g.out_degree(v)));
}

TEST(Heuristics, TriangleAtOneTime) {
  auto g = load_edge_stream_from_string("a b 1\nb c 1\nc a 1\n", false);
  std::vector<std::size_t> ns = {1};
  auto hs = heuristic_rankings(g, ns);
  EXPECT_EQ(hs[0].ranking.score, std::vector<double>(3, 0.0));
  EXPECT_EQ(hs[1].ranking.score, std::vector<double>(3, 2.0));
  EXPECT_THROW(kendall_tau_b(hs[1].ranking, hs[1].ranking), DegenerateRankingError);
}

TEST(Heuristics, EdgelessIsDegenerate) {
  TemporalGraph g(5, {});
  std::vector<std::size_t> ns = {1};
  for (auto& h : heuristic_rankings(g, ns))
    EXPECT_THROW(kendall_tau_b(h.ranking, h.ranking), DegenerateRankingError);
}
