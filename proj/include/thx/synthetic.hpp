#pragma once

#include <cstddef>
#include <cstdint>

#include "thx/graph.hpp"

namespace thx {

/// Directed edges with uniformly random distinct endpoints and availability
/// times uniform in [1, max_time].
TemporalGraph random_temporal_graph(std::size_t nodes, std::size_t edges, Time max_time,
                                    std::uint64_t seed, Time lambda = 1);

/// Undirected contacts (both directions inserted) over `nodes` nodes.
TemporalGraph random_undirected_temporal_graph(std::size_t nodes, std::size_t contacts,
                                               Time max_time, std::uint64_t seed);

/// Activity-driven broadcast network: node i fires messages at a rate
/// proportional to (i + 1)^-exponent, each to a uniformly random other node
/// at a uniformly random time in [1, max_time]. Low ids are broadcast hubs.
TemporalGraph broadcast_hub_graph(std::size_t nodes, std::size_t messages, Time max_time,
                                  double exponent, std::uint64_t seed);

}  // namespace thx
