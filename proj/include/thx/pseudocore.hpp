#pragma once

#include <cstddef>
#include <vector>

#include "thx/graph.hpp"
#include "thx/stream.hpp"

namespace thx {

/// Temporal (n,k)-pseudocores for one order n and direction. Membership is
/// decided by the index computed on the full graph; there is no peeling.
struct PseudocoreDecomposition {
  std::size_t n = 0;
  Direction direction = Direction::kOut;
  std::vector<HValue> core_number;
  /// Distinct core numbers, ascending.
  std::vector<HValue> distinct_levels;

  /// Nodes with core_number >= k, ascending ids.
  std::vector<NodeId> members(HValue k) const;
  /// Levels highest first; position in this list is the core's rank.
  std::vector<HValue> ranked_levels() const;
};

PseudocoreDecomposition decompose(const HIndexTable& table, std::size_t order);
/// Same, from a single order's values (e.g. a recurs engine result).
PseudocoreDecomposition decompose(std::vector<HValue> values, std::size_t order,
                                  Direction direction);

/// Induced temporal subgraph on the (n,k)-pseudocore.
TemporalGraph extract_core(const TemporalGraph& g, const PseudocoreDecomposition& d,
                           HValue k);

/// tau_n: maximum h^(n) over the nodes (0 for an empty node set).
HValue temporal_pseudo_degeneracy(const HIndexTable& table, std::size_t n);
HValue temporal_pseudo_degeneracy(const TemporalGraph& g, std::size_t n,
                                  Direction direction);

/// eta_k: largest n for which some node has h^(n) >= k, or -1 when none.
/// The table must extend past the first all-below-k order (a table up to
/// temporal_diameter(g) + 1 always does).
long order_pseudo_degeneracy(const HIndexTable& table, HValue k);
long order_pseudo_degeneracy(const TemporalGraph& g, HValue k, Direction direction);

}  // namespace thx
