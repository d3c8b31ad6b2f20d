#include "thx/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "thx/error.hpp"
#include "thx/h_operators.hpp"
#include "thx/parallel.hpp"
#include "thx/stream.hpp"

namespace thx {

void SirParams::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw PreconditionError("beta must lie in [0, 1]");
  if (!(recovery_mean > 0.0)) throw PreconditionError("recovery mean must be positive");
  if (trials < 1) throw PreconditionError("trials must be >= 1");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t master, std::uint64_t seed_node, std::uint64_t trial)
    : engine_(splitmix64(splitmix64(splitmix64(master) ^ seed_node) ^ trial)) {}

double TrialRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double TrialRng::exponential(double mean) {
  return -mean * std::log1p(-uniform());
}

SirOutcome sir_run(const TemporalGraph& g, NodeId seed_node, const SirParams& p,
                   TrialRng& rng) {
  if (seed_node >= g.num_nodes()) throw PreconditionError("seed node out of range");
  constexpr double kNever = std::numeric_limits<double>::infinity();
  const std::size_t nv = g.num_nodes();
  SirOutcome out;
  out.infected_at.assign(nv, kNever);
  out.recovered_at.assign(nv, kNever);
  out.infector.assign(nv, seed_node);
  out.contact_time.assign(nv, 0);

  const Time start = g.empty() ? 0 : g.edges().front().t;
  out.infected_at[seed_node] = static_cast<double>(start);
  out.recovered_at[seed_node] = static_cast<double>(start) + rng.exponential(p.recovery_mean);
  out.contact_time[seed_node] = start;
  out.influence = 1;
  double last_recovery = out.recovered_at[seed_node];

  for (const auto& e : g.edges()) {
    const double t = static_cast<double>(e.t);
    if (t >= last_recovery) break;  // nobody is infectious any more
    if (out.infected_at[e.v] != kNever) continue;
    if (!(out.infected_at[e.u] <= t && t < out.recovered_at[e.u])) continue;
    if (!(rng.uniform() < p.beta)) continue;
    const double at = static_cast<double>(e.arrival());
    out.infected_at[e.v] = at;
    out.recovered_at[e.v] = at + rng.exponential(p.recovery_mean);
    out.infector[e.v] = e.u;
    out.contact_time[e.v] = e.t;
    last_recovery = std::max(last_recovery, out.recovered_at[e.v]);
    ++out.influence;
  }
  return out;
}

std::size_t sir_simulate(const TemporalGraph& g, NodeId seed_node, const SirParams& p,
                         TrialRng& rng) {
  return sir_run(g, seed_node, p, rng).influence;
}

NodeRanking sir_ranking(const TemporalGraph& g, const SirParams& p) {
  p.validate();
  NodeRanking r;
  r.score.assign(g.num_nodes(), 0.0);
  parallel_for(g.num_nodes(), [&](std::size_t u) {
    std::size_t total = 0;
    for (std::size_t trial = 0; trial < p.trials; ++trial) {
      TrialRng rng(p.rng_seed, u, trial);
      total += sir_simulate(g, static_cast<NodeId>(u), p, rng);
    }
    r.score[u] = static_cast<double>(total) / static_cast<double>(p.trials);
  });
  return r;
}

namespace {

// Sum over groups of equal consecutive values of size*(size-1)/2.
template <typename Eq>
std::uint64_t tied_pairs(std::span<const std::size_t> order, Eq equal) {
  std::uint64_t ties = 0, run = 1;
  for (std::size_t i = 1; i <= order.size(); ++i) {
    if (i < order.size() && equal(order[i - 1], order[i])) {
      ++run;
    } else {
      ties += run * (run - 1) / 2;
      run = 1;
    }
  }
  return ties;
}

// Merge sort of `idx` by key, returning the number of inversions.
std::uint64_t sort_count_swaps(std::vector<std::size_t>& idx, std::span<const double> key) {
  std::vector<std::size_t> buf(idx.size());
  std::uint64_t swaps = 0;
  for (std::size_t width = 1; width < idx.size(); width *= 2) {
    for (std::size_t lo = 0; lo < idx.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, idx.size());
      const std::size_t hi = std::min(lo + 2 * width, idx.size());
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (key[idx[j]] < key[idx[i]]) {
          swaps += mid - i;
          buf[k++] = idx[j++];
        } else {
          buf[k++] = idx[i++];
        }
      }
      while (i < mid) buf[k++] = idx[i++];
      while (j < hi) buf[k++] = idx[j++];
    }
    std::swap(idx, buf);
  }
  return swaps;
}

}  // namespace

double kendall_tau_b(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw PreconditionError("rankings differ in length");
  if (a.size() < 2) throw PreconditionError("rank correlation needs at least two nodes");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!std::isfinite(a[i]) || !std::isfinite(b[i]))
      throw PreconditionError("rankings must be finite");

  // Knight's algorithm.
  const std::size_t n = a.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return a[i] < a[j] || (a[i] == a[j] && b[i] < b[j]);
  });
  const std::uint64_t n1 = tied_pairs(idx, [&](std::size_t i, std::size_t j) { return a[i] == a[j]; });
  const std::uint64_t n3 = tied_pairs(
      idx, [&](std::size_t i, std::size_t j) { return a[i] == a[j] && b[i] == b[j]; });
  const std::uint64_t swaps = sort_count_swaps(idx, b);
  const std::uint64_t n2 = tied_pairs(idx, [&](std::size_t i, std::size_t j) { return b[i] == b[j]; });

  const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (n1 == n0 || n2 == n0)
    throw DegenerateRankingError("ranking with all pairs tied; tau-b undefined");
  // concordant - discordant = n0 - n1 - n2 + n3 - 2 * swaps
  const double numerator = static_cast<double>(n0) - static_cast<double>(n1) -
                           static_cast<double>(n2) + static_cast<double>(n3) -
                           2.0 * static_cast<double>(swaps);
  const double denominator =
      n1 == n2 ? static_cast<double>(n0 - n1)
               : std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2));
  return numerator / denominator;
}

double kendall_tau_b(const NodeRanking& a, const NodeRanking& b) {
  return kendall_tau_b(a.score, b.score);
}

std::vector<NamedRanking> heuristic_rankings(const TemporalGraph& g,
                                             std::span<const std::size_t> n_values) {
  std::vector<NamedRanking> out;
  auto to_ranking = [](const std::vector<HValue>& v) {
    return NodeRanking{{v.begin(), v.end()}};
  };
  if (!n_values.empty()) {
    const std::size_t max_n = *std::max_element(n_values.begin(), n_values.end());
    const HIndexTable table = compute_table(g, max_n, Direction::kOut);
    for (std::size_t n : n_values)
      out.push_back({"thi_n" + std::to_string(n), to_ranking(table.order_values(n))});
  }
  const StaticGraph s = symmetrized(aggregate(g));
  std::vector<HValue> degree(s.num_nodes());
  for (NodeId v = 0; v < s.num_nodes(); ++v) degree[v] = static_cast<HValue>(s.degree(v));
  out.push_back({"degree", to_ranking(degree)});
  out.push_back({"h_index", to_ranking(static_h_index(s))});
  out.push_back({"k_core", to_ranking(k_core(s))});
  return out;
}

}  // namespace thx
