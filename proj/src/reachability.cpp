#include "thx/reachability.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

#include "thx/error.hpp"
#include "thx/parallel.hpp"

namespace thx {

namespace {

void expand(const TemporalGraph& g, ReachabilityTree::Node& node, Direction direction,
            std::size_t remaining, std::size_t& size, std::size_t budget) {
  if (remaining == 0) return;
  auto nbrs = temporal_neighborhood(g, node.label.node, node.label.time, direction);
  size += nbrs.size();
  if (size > budget)
    throw BudgetExceededError("reachability tree exceeds " + std::to_string(budget) +
                              " nodes");
  node.children.reserve(nbrs.size());
  for (const auto& nt : nbrs) {
    node.children.push_back({nt, {}});
    expand(g, node.children.back(), direction, remaining - 1, size, budget);
  }
}

std::size_t count_depths(const ReachabilityTree::Node& node, std::size_t depth,
                         std::size_t max_depth) {
  std::size_t count = depth >= 1 ? 1 : 0;
  if (depth == max_depth) return count;
  for (const auto& c : node.children) count += count_depths(c, depth + 1, max_depth);
  return count;
}

}  // namespace

ReachabilityTree build_reachability_tree(const TemporalGraph& g, NodeId v,
                                         Direction direction, std::size_t depth_cap,
                                         std::size_t budget) {
  if (v >= g.num_nodes()) throw PreconditionError("node id out of range");
  ReachabilityTree tree;
  tree.direction = direction;
  tree.depth_cap = depth_cap;
  tree.root.label = {v, direction == Direction::kOut ? Time{0} : kInfinity};
  expand(g, tree.root, direction, depth_cap, tree.size, budget);
  return tree;
}

HValue phi(const ReachabilityTree::Node& node, std::size_t depth, std::size_t n) {
  if (depth == n) return static_cast<HValue>(node.children.size());
  if (depth > n) return 0;
  std::vector<HValue> values;
  values.reserve(node.children.size());
  for (const auto& c : node.children) values.push_back(phi(c, depth + 1, n));
  return h_operator(values);
}

HValue phi(const ReachabilityTree& tree, std::size_t n) {
  if (tree.depth_cap < n + 1)
    throw PreconditionError("reachability tree too shallow for phi_n");
  return phi(tree.root, 0, n);
}

std::size_t descendant_count(const ReachabilityTree& tree, std::size_t n) {
  if (tree.depth_cap < n + 1)
    throw PreconditionError("reachability tree too shallow for descendant count");
  return count_depths(tree.root, 0, n + 1);
}

std::vector<bool> reachable_from(const TemporalGraph& g, NodeId source) {
  if (source >= g.num_nodes()) throw PreconditionError("node id out of range");
  // Earliest arrival per node; the source is available from the start.
  std::vector<Time> arrival(g.num_nodes(), kInfinity);
  arrival[source] = std::numeric_limits<Time>::min();
  for (const auto& e : g.edges()) {
    if (arrival[e.u] <= e.t && e.arrival() < arrival[e.v]) arrival[e.v] = e.arrival();
  }
  std::vector<bool> reach(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) reach[v] = arrival[v] != kInfinity;
  return reach;
}

bool reaches(const TemporalGraph& g, NodeId u, NodeId v) {
  if (v >= g.num_nodes()) throw PreconditionError("node id out of range");
  return reachable_from(g, u)[v];
}

std::size_t temporal_diameter(const TemporalGraph& g) {
  // Longest walk ending with each edge. An edge's arrival only becomes usable
  // for edges departing at or after it, so pending arrivals sit in a min-heap
  // until the sweep reaches their time.
  using Pending = std::tuple<Time, NodeId, std::size_t>;
  std::priority_queue<Pending, std::vector<Pending>, std::greater<>> pending;
  std::vector<std::size_t> best(g.num_nodes(), 0);
  std::size_t diameter = 0;
  for (const auto& e : g.edges()) {
    while (!pending.empty() && std::get<0>(pending.top()) <= e.t) {
      auto [time, node, length] = pending.top();
      pending.pop();
      best[node] = std::max(best[node], length);
    }
    const std::size_t length = best[e.u] + 1;
    diameter = std::max(diameter, length);
    pending.emplace(e.arrival(), e.v, length);
  }
  return diameter;
}

ReachScores reach_scores(const TemporalGraph& g, std::span<const NodeId> core_nodes) {
  std::vector<NodeId> core(core_nodes.begin(), core_nodes.end());
  std::sort(core.begin(), core.end());
  core.erase(std::unique(core.begin(), core.end()), core.end());
  if (core.empty()) throw PreconditionError("reachability scores of an empty core");
  std::vector<bool> in_core(g.num_nodes(), false);
  for (NodeId v : core) {
    if (v >= g.num_nodes()) throw PreconditionError("node id out of range");
    in_core[v] = true;
  }
  std::vector<std::size_t> global(core.size()), local(core.size());
  parallel_for(core.size(), [&](std::size_t i) {
    auto reach = reachable_from(g, core[i]);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (!reach[v]) continue;
      ++global[i];
      if (in_core[v]) ++local[i];
    }
  });
  double g_sum = 0, l_sum = 0;
  for (std::size_t i = 0; i < core.size(); ++i) {
    g_sum += static_cast<double>(global[i]);
    l_sum += static_cast<double>(local[i]);
  }
  const double k = static_cast<double>(core.size());
  return {g_sum / (k * static_cast<double>(g.num_nodes())), l_sum / (k * k)};
}

}  // namespace thx
