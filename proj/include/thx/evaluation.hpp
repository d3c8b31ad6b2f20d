#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "thx/graph.hpp"

namespace thx {

/// Parameters of the SIR spreading process. The recovery delay of a newly
/// infected node is exponential with mean `recovery_mean` (network time
/// units), i.e. rate 1 / recovery_mean.
struct SirParams {
  double beta = 0.5;
  double recovery_mean = 20.0;
  std::size_t trials = 1000;
  std::uint64_t rng_seed = 1;

  /// Throws PreconditionError when out of range.
  void validate() const;
};

/// Random stream for one (seed node, trial) pair, derived from the master
/// seed by hashing, so results do not depend on evaluation order.
class TrialRng {
 public:
  TrialRng(std::uint64_t master, std::uint64_t seed_node, std::uint64_t trial);

  /// Uniform in [0, 1).
  double uniform();
  double exponential(double mean);

 private:
  std::mt19937_64 engine_;
};

/// Full trace of one simulation run.
struct SirOutcome {
  /// Infinity for nodes that were never infected.
  std::vector<double> infected_at;
  std::vector<double> recovered_at;
  /// Infecting node and contact time; the seed is its own infector.
  std::vector<NodeId> infector;
  std::vector<Time> contact_time;
  std::size_t influence = 0;
};

/// Replays the edge stream chronologically. A node infected at time s with
/// recovery time r transmits over contacts (u, v, t) with s <= t < r; a
/// successful contact infects v at t + lambda. The seed is infected at the
/// first availability time of the stream.
SirOutcome sir_run(const TemporalGraph& g, NodeId seed_node, const SirParams& p,
                   TrialRng& rng);

/// Number of nodes infected or recovered at the end of one run.
std::size_t sir_simulate(const TemporalGraph& g, NodeId seed_node, const SirParams& p,
                         TrialRng& rng);

/// Per-node scores; a higher score means a higher rank.
struct NodeRanking {
  std::vector<double> score;
};

/// Mean influence over p.trials runs for every seed node.
NodeRanking sir_ranking(const TemporalGraph& g, const SirParams& p);

/// Kendall tau-b with tie correction, O(n log n). Throws
/// DegenerateRankingError when either side has every pair tied.
double kendall_tau_b(std::span<const double> a, std::span<const double> b);
double kendall_tau_b(const NodeRanking& a, const NodeRanking& b);

struct NamedRanking {
  std::string name;
  NodeRanking ranking;
};

/// Outward temporal H-index for each requested order ("thi_n<order>"), then
/// static degree, H-index and core number of the symmetrized aggregate
/// ("degree", "h_index", "k_core").
std::vector<NamedRanking> heuristic_rankings(const TemporalGraph& g,
                                             std::span<const std::size_t> n_values);

}  // namespace thx
