#include "thx/synthetic.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "thx/error.hpp"

namespace thx {

namespace {

std::pair<NodeId, NodeId> distinct_pair(std::mt19937_64& rng, std::size_t nodes) {
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(nodes - 1));
  NodeId u = pick(rng), v = pick(rng);
  while (v == u) v = pick(rng);
  return {u, v};
}

}  // namespace

TemporalGraph random_temporal_graph(std::size_t nodes, std::size_t edges, Time max_time,
                                    std::uint64_t seed, Time lambda) {
  if (edges > 0 && nodes < 2) throw PreconditionError("need two nodes for an edge");
  if (max_time < 1) throw PreconditionError("max_time must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Time> time(1, max_time);
  std::vector<TemporalEdge> es;
  es.reserve(edges);
  for (std::size_t i = 0; i < edges; ++i) {
    auto [u, v] = distinct_pair(rng, nodes);
    es.push_back({u, v, time(rng), lambda});
  }
  return TemporalGraph(nodes, std::move(es));
}

TemporalGraph random_undirected_temporal_graph(std::size_t nodes, std::size_t contacts,
                                               Time max_time, std::uint64_t seed) {
  if (contacts > 0 && nodes < 2) throw PreconditionError("need two nodes for an edge");
  if (max_time < 1) throw PreconditionError("max_time must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Time> time(1, max_time);
  std::vector<TemporalEdge> es;
  es.reserve(2 * contacts);
  for (std::size_t i = 0; i < contacts; ++i) {
    auto [u, v] = distinct_pair(rng, nodes);
    const Time t = time(rng);
    es.push_back({u, v, t, 1});
    es.push_back({v, u, t, 1});
  }
  return TemporalGraph(nodes, std::move(es));
}

TemporalGraph broadcast_hub_graph(std::size_t nodes, std::size_t messages, Time max_time,
                                  double exponent, std::uint64_t seed) {
  if (nodes < 2) throw PreconditionError("need two nodes for an edge");
  if (max_time < 1) throw PreconditionError("max_time must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> weight(nodes);
  for (std::size_t i = 0; i < nodes; ++i)
    weight[i] = std::pow(static_cast<double>(i + 1), -exponent);
  std::discrete_distribution<NodeId> sender(weight.begin(), weight.end());
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(nodes - 1));
  std::uniform_int_distribution<Time> time(1, max_time);
  std::vector<TemporalEdge> es;
  es.reserve(messages);
  for (std::size_t i = 0; i < messages; ++i) {
    const NodeId u = sender(rng);
    NodeId v = pick(rng);
    while (v == u) v = pick(rng);
    es.push_back({u, v, time(rng), 1});
  }
  return TemporalGraph(nodes, std::move(es));
}

}  // namespace thx
