#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thx/graph.hpp"
#include "thx/h_operators.hpp"

namespace thx {

/// Tree of all temporal walks leaving (outward) or entering (inward) a node,
/// expanded up to a fixed depth. Test and validation machinery only: its
/// size is exponential in the depth.
struct ReachabilityTree {
  struct Node {
    NodeTime label;
    std::vector<Node> children;
  };

  Node root;
  Direction direction = Direction::kOut;
  std::size_t depth_cap = 0;
  std::size_t size = 1;
};

inline constexpr std::size_t kDefaultTreeBudget = 10'000'000;

/// Root (v, 0) outward, (v, infinity) inward. Throws BudgetExceededError once
/// more than `budget` tree nodes would be created.
ReachabilityTree build_reachability_tree(const TemporalGraph& g, NodeId v,
                                         Direction direction, std::size_t depth_cap,
                                         std::size_t budget = kDefaultTreeBudget);

/// phi_n at the root. Needs depth_cap >= n + 1.
HValue phi(const ReachabilityTree& tree, std::size_t n);

/// phi_n for a tree node at the given depth.
HValue phi(const ReachabilityTree::Node& node, std::size_t depth, std::size_t n);

/// Number of tree nodes u with 1 <= d(u) <= n + 1. Needs depth_cap >= n + 1.
std::size_t descendant_count(const ReachabilityTree& tree, std::size_t n);

/// reach[v] is true iff a temporal walk leads from `source` to v. The empty
/// walk makes every node reach itself.
std::vector<bool> reachable_from(const TemporalGraph& g, NodeId source);

bool reaches(const TemporalGraph& g, NodeId u, NodeId v);

/// Length (edge count) of the longest temporal walk; 0 for no edges.
std::size_t temporal_diameter(const TemporalGraph& g);

struct ReachScores {
  double global = 0.0;
  double local = 0.0;
};

/// Global and local reachability scores of the node set `core`. Sources are
/// swept concurrently. Throws PreconditionError for an empty core.
ReachScores reach_scores(const TemporalGraph& g, std::span<const NodeId> core);

}  // namespace thx
