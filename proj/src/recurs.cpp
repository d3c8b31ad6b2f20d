#include "thx/recurs.hpp"

#include <limits>

#include "thx/error.hpp"

namespace thx {

namespace {
constexpr HValue kUnset = std::numeric_limits<HValue>::max();
}

RecursEngine::RecursEngine(const TemporalGraph& g, Direction direction,
                           std::size_t max_order, bool memoize)
    : graph_(g), direction_(direction), max_order_(max_order), memoize_(memoize) {
  const std::size_t nv = g.num_nodes();
  offsets_.assign(nv + 1, 0);
  child_node_.reserve(g.num_edges());
  child_pos_.reserve(g.num_edges());
  for (NodeId v = 0; v < nv; ++v) {
    if (direction_ == Direction::kOut) {
      for (const auto& e : g.out_edges(v)) {
        child_node_.push_back(e.v);
        child_pos_.push_back(g.out_position(e.v, e.arrival()));
      }
    } else {
      for (const auto& e : g.in_edges(v)) {
        child_node_.push_back(e.u);
        child_pos_.push_back(g.in_position(e.u, e.t));
      }
    }
    offsets_[v + 1] = child_node_.size();
  }
  memo_.resize(nv);
}

std::size_t RecursEngine::position(NodeId v, Time t) const {
  return direction_ == Direction::kOut ? graph_.out_position(v, t)
                                       : graph_.in_position(v, t);
}

// Outward: edges [pos, deg) qualify. Inward: edges [0, pos) qualify.
std::size_t RecursEngine::degree_at(NodeId v, std::size_t pos) const {
  const std::size_t deg = offsets_[v + 1] - offsets_[v];
  return direction_ == Direction::kOut ? deg - pos : pos;
}

HValue* RecursEngine::memo_slot(NodeId v, std::size_t pos, std::size_t order) {
  const std::size_t width = offsets_[v + 1] - offsets_[v] + 1;
  auto& table = memo_[v];
  if (table.empty()) table.assign(width * max_order_, kUnset);
  return &table[(order - 1) * width + pos];
}

HValue RecursEngine::value(NodeId v, Time t, std::size_t order) {
  if (v >= graph_.num_nodes()) throw PreconditionError("node id out of range");
  if (order > max_order_) throw PreconditionError("order exceeds engine bound");
  return evaluate(v, position(v, t), order);
}

HValue RecursEngine::root_value(NodeId v, std::size_t order) {
  return value(v, direction_ == Direction::kOut ? Time{0} : kInfinity, order);
}

HValue RecursEngine::evaluate(NodeId root, std::size_t root_pos, std::size_t root_order) {
  auto base = [&](NodeId v, std::size_t pos, std::size_t order, HValue& out) {
    const std::size_t d = degree_at(v, pos);
    if (order == 0 || d == 0) {
      out = static_cast<HValue>(d);
      return true;
    }
    if (memoize_) {
      HValue m = *memo_slot(v, pos, order);
      if (m != kUnset) {
        out = m;
        return true;
      }
    }
    return false;
  };
  auto push = [&](NodeId v, std::size_t pos, std::size_t order) {
    std::size_t begin = offsets_[v], end = offsets_[v + 1];
    if (direction_ == Direction::kOut) begin += pos;
    else end = begin + pos;
    stack_.push_back({v, order, pos, begin, end, arena_.size()});
  };

  HValue result = 0;
  if (base(root, root_pos, root_order, result)) return result;

  push(root, root_pos, root_order);
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    if (f.next < f.end) {
      const NodeId w = child_node_[f.next];
      const std::size_t wpos = child_pos_[f.next];
      const std::size_t worder = f.order - 1;
      ++f.next;
      HValue child = 0;
      if (base(w, wpos, worder, child)) arena_.push_back(child);
      else push(w, wpos, worder);  // invalidates f
      continue;
    }
    const HValue h = h_operator(
        std::span<const HValue>(arena_).subspan(f.arena_start), scratch_);
    if (memoize_) {
      *memo_slot(f.node, f.pos, f.order) = h;
      ++memo_entries_;
    }
    arena_.resize(f.arena_start);
    stack_.pop_back();
    if (stack_.empty()) result = h;
    else arena_.push_back(h);
  }
  return result;
}

std::vector<HValue> recurs_compute(const TemporalGraph& g, std::size_t n,
                                   Direction direction, RecursOptions options,
                                   std::size_t* memo_entries) {
  RecursEngine engine(g, direction, n, options.memoize);
  std::vector<HValue> h(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) h[v] = engine.root_value(v, n);
  if (memo_entries != nullptr) *memo_entries = engine.memo_entries();
  return h;
}

}  // namespace thx
