#pragma once

#include <cstddef>
#include <vector>

#include "thx/graph.hpp"
#include "thx/h_operators.hpp"

namespace thx {

/// Memoized top-down evaluation of the temporal H-index recursion.
///
/// Works for arbitrary per-edge transition times. The value h^(i)(v, t)
/// only depends on which incident edges pass the time filter, so the memo for
/// node v and order i is a dense table indexed by the position of t in v's
/// time-sorted incident-edge list. Recursion runs on an explicit stack; the
/// depth equals the order, which may be large.
class RecursEngine {
 public:
  /// `max_order` bounds the orders that value() accepts.
  RecursEngine(const TemporalGraph& g, Direction direction, std::size_t max_order,
               bool memoize = true);

  /// h^(order)(v, t) in the engine's direction.
  HValue value(NodeId v, Time t, std::size_t order);

  /// h^(order)_{v,*}: root time 0 outward, infinity inward.
  HValue root_value(NodeId v, std::size_t order);

  Direction direction() const noexcept { return direction_; }
  std::size_t memo_entries() const noexcept { return memo_entries_; }

 private:
  struct Frame {
    NodeId node;
    std::size_t order;
    std::size_t pos;
    std::size_t next;  // next child slot in the node's edge list
    std::size_t end;
    std::size_t arena_start;
  };

  std::size_t position(NodeId v, Time t) const;
  std::size_t degree_at(NodeId v, std::size_t pos) const;
  HValue evaluate(NodeId v, std::size_t pos, std::size_t order);
  HValue* memo_slot(NodeId v, std::size_t pos, std::size_t order);

  const TemporalGraph& graph_;
  Direction direction_;
  std::size_t max_order_;
  bool memoize_;

  // Flattened per-node incident edge lists: child node and child position.
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> child_node_;
  std::vector<std::size_t> child_pos_;

  std::vector<std::vector<HValue>> memo_;
  std::size_t memo_entries_ = 0;

  std::vector<Frame> stack_;
  std::vector<HValue> arena_;
  std::vector<HValue> scratch_;
};

struct RecursOptions {
  bool memoize = true;
};

/// h^(n)_{v,*} for every node.
std::vector<HValue> recurs_compute(const TemporalGraph& g, std::size_t n,
                                   Direction direction, RecursOptions options = {},
                                   std::size_t* memo_entries = nullptr);

}  // namespace thx
