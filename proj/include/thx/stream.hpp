#pragma once

#include <cstddef>
#include <vector>

#include "thx/graph.hpp"
#include "thx/h_operators.hpp"

namespace thx {

/// h^(i)_{v,*} for every node v and every order 0 <= i <= max_order.
class HIndexTable {
 public:
  HIndexTable() = default;
  HIndexTable(Direction direction, std::size_t num_nodes, std::size_t max_order)
      : direction_(direction),
        num_nodes_(num_nodes),
        max_order_(max_order),
        values_(num_nodes * (max_order + 1), 0) {}

  Direction direction() const noexcept { return direction_; }
  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t max_order() const noexcept { return max_order_; }

  HValue at(NodeId v, std::size_t order) const { return values_[index(v, order)]; }
  HValue& at(NodeId v, std::size_t order) { return values_[index(v, order)]; }

  /// Column `order` as a per-node vector.
  std::vector<HValue> order_values(std::size_t order) const;

  friend bool operator==(const HIndexTable&, const HIndexTable&) = default;

 private:
  std::size_t index(NodeId v, std::size_t order) const;

  Direction direction_ = Direction::kOut;
  std::size_t num_nodes_ = 0;
  std::size_t max_order_ = 0;
  std::vector<HValue> values_;
};

/// Single reverse-chronological pass computing all outward orders at once.
/// Requires lambda == 1 on every edge.
///
/// Per tail u the engine keeps the lists pi[u][0..n]; every edge appends one
/// entry with the same time to each of them, so the times are stored once per
/// node and the values once per (node, order). Entries are appended in
/// non-increasing time order, which turns the strict time filter of H_t into
/// a prefix. pi[u][n+1] is never read and is not materialized.
class StreamEngine {
 public:
  StreamEngine(const TemporalGraph& g, std::size_t n);

  bool done() const noexcept { return next_ == 0; }
  /// Processes the next edge in reverse chronological order.
  void step();
  void run();

  /// Availability time of the most recently processed edge.
  Time current_time() const noexcept { return current_time_; }
  std::size_t processed() const noexcept { return graph_.num_edges() - next_; }

  HValue degree_snapshot(NodeId v) const { return deg_.at(v); }
  Time last_update(NodeId v) const { return lt_.at(v); }

  /// |pi[v][i]|; identical for every order i.
  std::size_t list_size(NodeId v) const { return times_.at(v).size(); }

  /// H_t(pi[v][order]). Order 0 counts entries with t' > t.
  HValue h_t(NodeId v, std::size_t order, Time t) const;

  /// Materialized copy of pi[v][order], in append order.
  TimedValueList list(NodeId v, std::size_t order) const;

  /// Stored (time, value) entries, counted list by list.
  std::size_t entries() const noexcept { return entries_; }

  /// Final table; the pass must be complete.
  HIndexTable finish() const;

 private:
  std::size_t prefix_length(NodeId v, Time t) const;
  std::vector<HValue>& column(NodeId v, std::size_t order) {
    return values_[static_cast<std::size_t>(v) * n_ + (order - 1)];
  }
  const std::vector<HValue>& column(NodeId v, std::size_t order) const {
    return values_[static_cast<std::size_t>(v) * n_ + (order - 1)];
  }

  const TemporalGraph& graph_;
  std::size_t n_;
  std::size_t next_;
  Time current_time_ = kInfinity;

  std::vector<Time> lt_;
  std::vector<HValue> deg_;
  std::vector<std::vector<Time>> times_;
  std::vector<std::vector<HValue>> values_;  // (node, order 1..n)
  std::size_t entries_ = 0;
  mutable std::vector<HValue> scratch_;
};

/// Outward table for orders 0..n. Throws UnsupportedInputError unless every
/// lambda equals 1.
HIndexTable stream_compute(const TemporalGraph& g, std::size_t n,
                           std::size_t* peak_entries = nullptr);

/// Inward table via the temporal transpose.
HIndexTable stream_compute_inward(const TemporalGraph& g, std::size_t n,
                                  std::size_t* peak_entries = nullptr);

/// True when the streaming engine accepts g.
bool stream_supported(const TemporalGraph& g) noexcept;

/// Table for orders 0..n in either direction: streaming engine when
/// supported, otherwise one recursive run per order.
HIndexTable compute_table(const TemporalGraph& g, std::size_t n, Direction direction);

}  // namespace thx
