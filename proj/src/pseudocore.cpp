#include "thx/pseudocore.hpp"

#include <algorithm>

#include "thx/error.hpp"
#include "thx/reachability.hpp"
#include "thx/recurs.hpp"

namespace thx {

std::vector<NodeId> PseudocoreDecomposition::members(HValue k) const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < core_number.size(); ++v)
    if (core_number[v] >= k) out.push_back(v);
  return out;
}

std::vector<HValue> PseudocoreDecomposition::ranked_levels() const {
  return {distinct_levels.rbegin(), distinct_levels.rend()};
}

PseudocoreDecomposition decompose(const HIndexTable& table, std::size_t order) {
  if (order > table.max_order()) throw PreconditionError("order out of range");
  return decompose(table.order_values(order), order, table.direction());
}

PseudocoreDecomposition decompose(std::vector<HValue> values, std::size_t order,
                                  Direction direction) {
  PseudocoreDecomposition d;
  d.n = order;
  d.direction = direction;
  d.core_number = std::move(values);
  d.distinct_levels = d.core_number;
  std::sort(d.distinct_levels.begin(), d.distinct_levels.end());
  d.distinct_levels.erase(std::unique(d.distinct_levels.begin(), d.distinct_levels.end()),
                          d.distinct_levels.end());
  return d;
}

TemporalGraph extract_core(const TemporalGraph& g, const PseudocoreDecomposition& d,
                           HValue k) {
  if (d.core_number.size() != g.num_nodes())
    throw PreconditionError("decomposition does not match graph");
  auto keep = d.members(k);
  return induced_subgraph(g, keep);
}

HValue temporal_pseudo_degeneracy(const HIndexTable& table, std::size_t n) {
  auto col = table.order_values(n);
  return col.empty() ? 0 : *std::max_element(col.begin(), col.end());
}

HValue temporal_pseudo_degeneracy(const TemporalGraph& g, std::size_t n,
                                  Direction direction) {
  if (stream_supported(g)) return temporal_pseudo_degeneracy(compute_table(g, n, direction), n);
  auto h = recurs_compute(g, n, direction);
  return h.empty() ? 0 : *std::max_element(h.begin(), h.end());
}

long order_pseudo_degeneracy(const HIndexTable& table, HValue k) {
  if (k < 1) throw PreconditionError("order pseudo-degeneracy needs k >= 1");
  long best = -1;
  for (std::size_t n = 0; n <= table.max_order(); ++n) {
    if (temporal_pseudo_degeneracy(table, n) < k) return best;
    best = static_cast<long>(n);
  }
  throw PreconditionError("table does not reach an order where all values drop below k");
}

long order_pseudo_degeneracy(const TemporalGraph& g, HValue k, Direction direction) {
  const std::size_t bound = temporal_diameter(g) + 1;
  return order_pseudo_degeneracy(compute_table(g, bound, direction), k);
}

}  // namespace thx
