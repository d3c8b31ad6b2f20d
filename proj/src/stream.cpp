#include "thx/stream.hpp"

#include <algorithm>

#include "thx/error.hpp"
#include "thx/recurs.hpp"

namespace thx {

std::size_t HIndexTable::index(NodeId v, std::size_t order) const {
  if (v >= num_nodes_ || order > max_order_)
    throw PreconditionError("index table access out of range");
  return static_cast<std::size_t>(v) * (max_order_ + 1) + order;
}

std::vector<HValue> HIndexTable::order_values(std::size_t order) const {
  if (order > max_order_) throw PreconditionError("order out of range");
  std::vector<HValue> col(num_nodes_);
  for (NodeId v = 0; v < num_nodes_; ++v) col[v] = at(v, order);
  return col;
}

bool stream_supported(const TemporalGraph& g) noexcept {
  return g.empty() || g.common_lambda() == Time{1};
}

StreamEngine::StreamEngine(const TemporalGraph& g, std::size_t n)
    : graph_(g), n_(n), next_(g.num_edges()) {
  if (!stream_supported(g))
    throw UnsupportedInputError(
        "streaming engine requires transition time 1 on every edge; "
        "use the recurs engine for individual transition times");
  const std::size_t nv = g.num_nodes();
  lt_.assign(nv, kInfinity);
  deg_.assign(nv, 0);
  times_.resize(nv);
  values_.resize(nv * n_);
  for (NodeId v = 0; v < nv; ++v) {
    const std::size_t d = g.out_degree(v);
    if (d == 0) continue;
    times_[v].reserve(d);
    for (std::size_t i = 1; i <= n_; ++i) column(v, i).reserve(d);
  }
}

std::size_t StreamEngine::prefix_length(NodeId v, Time t) const {
  const auto& ts = times_[v];
  auto it = std::partition_point(ts.begin(), ts.end(), [t](Time x) { return x > t; });
  return static_cast<std::size_t>(it - ts.begin());
}

HValue StreamEngine::h_t(NodeId v, std::size_t order, Time t) const {
  if (order > n_) throw PreconditionError("order out of range");
  const std::size_t len = prefix_length(v, t);
  if (order == 0) return static_cast<HValue>(len);
  return h_operator(std::span<const HValue>(column(v, order)).first(len), scratch_);
}

TimedValueList StreamEngine::list(NodeId v, std::size_t order) const {
  if (order > n_) throw PreconditionError("order out of range");
  TimedValueList out;
  const auto& ts = times_.at(v);
  for (std::size_t k = 0; k < ts.size(); ++k)
    out.push_back({ts[k], order == 0 ? HValue{1} : column(v, order)[k]});
  return out;
}

void StreamEngine::step() {
  if (done()) throw PreconditionError("stream already consumed");
  const TemporalEdge& e = graph_.edges()[--next_];
  const NodeId u = e.u, v = e.v;
  const Time t = e.t;
  current_time_ = t;

  if (lt_[u] > t) {
    lt_[u] = t;
    deg_[u] = static_cast<HValue>(times_[u].size());
  }
  if (lt_[v] > t) {
    lt_[v] = t;
    deg_[v] = static_cast<HValue>(times_[v].size());
  }
  times_[u].push_back(t);
  ++entries_;
  if (n_ == 0) return;

  column(u, 1).push_back(deg_[v]);
  ++entries_;
  // With lambda = 1 every continuation of (u, v, t) departs strictly after t.
  const std::size_t len = prefix_length(v, t);
  for (std::size_t j = 1; j < n_; ++j) {
    const HValue h =
        h_operator(std::span<const HValue>(column(v, j)).first(len), scratch_);
    column(u, j + 1).push_back(h);
    ++entries_;
  }
}

void StreamEngine::run() {
  while (!done()) step();
}

HIndexTable StreamEngine::finish() const {
  if (!done()) throw PreconditionError("stream not fully consumed");
  HIndexTable table(Direction::kOut, graph_.num_nodes(), n_);
  for (NodeId v = 0; v < graph_.num_nodes(); ++v) {
    table.at(v, 0) = static_cast<HValue>(times_[v].size());
    // Root time 0 admits edges with t' >= 0, i.e. the filter t' > -1.
    for (std::size_t i = 1; i <= n_; ++i) table.at(v, i) = h_t(v, i, -1);
  }
  return table;
}

HIndexTable stream_compute(const TemporalGraph& g, std::size_t n,
                           std::size_t* peak_entries) {
  StreamEngine engine(g, n);
  engine.run();
  if (peak_entries != nullptr) *peak_entries = engine.entries();
  return engine.finish();
}

HIndexTable stream_compute_inward(const TemporalGraph& g, std::size_t n,
                                  std::size_t* peak_entries) {
  if (!stream_supported(g))
    throw UnsupportedInputError(
        "streaming engine requires transition time 1 on every edge; "
        "use the recurs engine for individual transition times");
  const TemporalGraph transposed = temporal_transpose(g);
  HIndexTable out = stream_compute(transposed, n, peak_entries);
  HIndexTable table(Direction::kIn, g.num_nodes(), n);
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    for (std::size_t i = 0; i <= n; ++i) table.at(v, i) = out.at(v, i);
  return table;
}

HIndexTable compute_table(const TemporalGraph& g, std::size_t n, Direction direction) {
  if (stream_supported(g))
    return direction == Direction::kOut ? stream_compute(g, n)
                                        : stream_compute_inward(g, n);
  HIndexTable table(direction, g.num_nodes(), n);
  RecursEngine engine(g, direction, n);
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    for (std::size_t i = 0; i <= n; ++i) table.at(v, i) = engine.root_value(v, i);
  return table;
}

}  // namespace thx
