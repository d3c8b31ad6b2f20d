#include "thx/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "thx/error.hpp"

namespace thx {

std::string_view to_string(Direction d) {
  return d == Direction::kOut ? "out" : "in";
}

Direction parse_direction(std::string_view s) {
  if (s == "out") return Direction::kOut;
  if (s == "in") return Direction::kIn;
  throw PreconditionError("unknown direction '" + std::string(s) +
                          "' (expected in|out)");
}

namespace {

// Counting-sort style bucketing of `edges` by key, stable within a bucket.
template <typename Key>
void bucket_edges(std::size_t num_nodes, std::span<const TemporalEdge> edges,
                  Key key, std::vector<std::size_t>& offsets,
                  std::vector<TemporalEdge>& out) {
  offsets.assign(num_nodes + 1, 0);
  for (const auto& e : edges) ++offsets[key(e) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  out.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : edges) out[cursor[key(e)]++] = e;
}

}  // namespace

TemporalGraph::TemporalGraph(std::size_t num_nodes,
                             std::vector<TemporalEdge> edges,
                             std::vector<std::string> labels)
    : num_nodes_(num_nodes), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(num_nodes_);
    for (std::size_t i = 0; i < num_nodes_; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != num_nodes_) {
    throw PreconditionError("label count does not match node count");
  }
  for (const auto& e : edges_) {
    if (e.u >= num_nodes_ || e.v >= num_nodes_)
      throw PreconditionError("edge endpoint out of range");
    if (e.u == e.v) throw PreconditionError("self-loop on node " + labels_[e.u]);
    if (e.lambda < 1) throw PreconditionError("transition time must be >= 1");
    if (e.t < 0) throw PreconditionError("availability time must be >= 0");
    if (e.t > kInfinity - e.lambda) throw PreconditionError("time overflow");
  }
  std::stable_sort(edges_.begin(), edges_.end(),
                   [](const TemporalEdge& a, const TemporalEdge& b) { return a.t < b.t; });

  for (const auto& e : edges_) {
    max_arrival_ = std::max(max_arrival_, e.arrival());
    if (e.lambda != edges_.front().lambda) uniform_lambda_ = false;
  }

  // edges_ is already time sorted, so bucketing by tail keeps each out-list
  // sorted by t.
  bucket_edges(num_nodes_, edges_, [](const TemporalEdge& e) { return e.u; },
               out_offsets_, out_);
  bucket_edges(num_nodes_, edges_, [](const TemporalEdge& e) { return e.v; },
               in_offsets_, in_);
  for (std::size_t u = 0; u < num_nodes_; ++u) {
    std::stable_sort(in_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[u]),
                     in_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[u + 1]),
                     [](const TemporalEdge& a, const TemporalEdge& b) {
                       return a.arrival() < b.arrival();
                     });
  }
}

std::optional<Time> TemporalGraph::common_lambda() const noexcept {
  if (edges_.empty() || !uniform_lambda_) return std::nullopt;
  return edges_.front().lambda;
}

std::span<const TemporalEdge> TemporalGraph::out_edges(NodeId u) const {
  if (u >= num_nodes_) throw PreconditionError("node id out of range");
  return std::span<const TemporalEdge>(out_).subspan(
      out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]);
}

std::span<const TemporalEdge> TemporalGraph::in_edges(NodeId u) const {
  if (u >= num_nodes_) throw PreconditionError("node id out of range");
  return std::span<const TemporalEdge>(in_).subspan(
      in_offsets_[u], in_offsets_[u + 1] - in_offsets_[u]);
}

std::size_t TemporalGraph::out_position(NodeId u, Time t) const {
  auto es = out_edges(u);
  auto it = std::partition_point(es.begin(), es.end(),
                                 [t](const TemporalEdge& e) { return e.t < t; });
  return static_cast<std::size_t>(it - es.begin());
}

std::size_t TemporalGraph::in_position(NodeId u, Time t) const {
  auto es = in_edges(u);
  auto it = std::partition_point(
      es.begin(), es.end(), [t](const TemporalEdge& e) { return e.arrival() <= t; });
  return static_cast<std::size_t>(it - es.begin());
}

std::size_t TemporalGraph::out_degree_at(NodeId u, Time t) const {
  return out_degree(u) - out_position(u, t);
}

std::size_t TemporalGraph::in_degree_at(NodeId u, Time t) const {
  return in_position(u, t);
}

std::optional<NodeId> TemporalGraph::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

std::size_t StaticGraph::num_edges() const noexcept {
  std::size_t m = 0;
  for (const auto& a : adjacency) m += a.size();
  return directed ? m : m / 2;
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

Time parse_time(std::string_view field, std::size_t line, const char* what) {
  Time value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError(line, std::string(what) + " '" + std::string(field) +
                               "' is not an integer");
  return value;
}

}  // namespace

TemporalGraph load_edge_stream(std::istream& in, bool directed) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<TemporalEdge> edges;

  auto intern = [&](std::string_view label) {
    auto [it, inserted] = ids.try_emplace(std::string(label), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.front().front() == '#' || fields.front().front() == '%') continue;
    if (fields.size() != 3 && fields.size() != 4)
      throw ParseError(line_no, "expected 3 or 4 fields, got " +
                                    std::to_string(fields.size()));
    if (fields[0] == fields[1])
      throw ParseError(line_no, "self-loop on '" + std::string(fields[0]) + "'");
    Time t = parse_time(fields[2], line_no, "time");
    if (t < 0) throw ParseError(line_no, "time must be non-negative");
    Time lambda = 1;
    if (fields.size() == 4) {
      lambda = parse_time(fields[3], line_no, "transition time");
      if (lambda < 1) throw ParseError(line_no, "transition time must be >= 1");
    }
    if (t > kInfinity - lambda) throw ParseError(line_no, "time overflow");
    NodeId u = intern(fields[0]);
    NodeId v = intern(fields[1]);
    edges.push_back({u, v, t, lambda});
    if (!directed) edges.push_back({v, u, t, lambda});
  }
  if (in.bad()) throw IoError("read error");
  std::size_t n = labels.size();
  return TemporalGraph(n, std::move(edges), std::move(labels));
}

TemporalGraph load_edge_stream_from_string(std::string_view text, bool directed) {
  std::istringstream in{std::string(text)};
  return load_edge_stream(in, directed);
}

TemporalGraph load_edge_file(const std::filesystem::path& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return load_edge_stream(in, directed);
}

void write_edge_stream(std::ostream& out, const TemporalGraph& g) {
  for (const auto& e : g.edges())
    out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << e.t << ' ' << e.lambda << '\n';
}

// ---------------------------------------------------------------------------
// Transformations

namespace {

std::vector<std::string> copy_labels(const TemporalGraph& g) {
  return {g.labels().begin(), g.labels().end()};
}

}  // namespace

TemporalGraph restrict_interval(const TemporalGraph& g, Time a, Time b) {
  if (a > b) throw PreconditionError("invalid interval: a > b");
  std::vector<TemporalEdge> kept;
  for (const auto& e : g.edges()) {
    if (e.t >= a && e.t <= b && e.lambda <= b - e.t) kept.push_back(e);
  }
  return TemporalGraph(g.num_nodes(), std::move(kept), copy_labels(g));
}

TemporalGraph induced_subgraph(const TemporalGraph& g, std::span<const NodeId> keep) {
  constexpr NodeId kDropped = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> remap(g.num_nodes(), kDropped);
  std::vector<NodeId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (NodeId v : sorted) {
    if (v >= g.num_nodes()) throw PreconditionError("node id out of range");
    remap[v] = static_cast<NodeId>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<TemporalEdge> edges;
  for (const auto& e : g.edges()) {
    if (remap[e.u] != kDropped && remap[e.v] != kDropped)
      edges.push_back({remap[e.u], remap[e.v], e.t, e.lambda});
  }
  std::size_t n = labels.size();
  return TemporalGraph(n, std::move(edges), std::move(labels));
}

TemporalGraph remove_isolated_nodes(const TemporalGraph& g) {
  std::vector<NodeId> keep;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (g.out_degree(v) + g.in_degree(v) > 0) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

StaticGraph aggregate(const TemporalGraph& g) {
  StaticGraph s;
  s.directed = true;
  s.adjacency.resize(g.num_nodes());
  for (const auto& e : g.edges()) s.adjacency[e.u].push_back(e.v);
  for (auto& a : s.adjacency) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return s;
}

StaticGraph symmetrized(const StaticGraph& g) {
  StaticGraph s;
  s.directed = false;
  s.adjacency.resize(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.adjacency[u]) {
      if (u == v) continue;
      s.adjacency[u].push_back(v);
      s.adjacency[v].push_back(u);
    }
  }
  for (auto& a : s.adjacency) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return s;
}

TemporalGraph temporal_transpose(const TemporalGraph& g) {
  const Time t_max = g.max_arrival();
  std::vector<TemporalEdge> edges;
  edges.reserve(g.num_edges());
  // Walk backwards so that equal-time edges come out in reversed input order.
  auto es = g.edges();
  for (auto it = es.rbegin(); it != es.rend(); ++it)
    edges.push_back({it->v, it->u, t_max - it->t, it->lambda});
  return TemporalGraph(g.num_nodes(), std::move(edges), copy_labels(g));
}

std::vector<NodeTime> temporal_neighborhood(const TemporalGraph& g, NodeId v,
                                            Time t, Direction direction) {
  std::vector<NodeTime> out;
  if (direction == Direction::kOut) {
    auto es = g.out_edges(v).subspan(g.out_position(v, t));
    for (const auto& e : es) out.push_back({e.v, e.arrival()});
  } else {
    auto es = g.in_edges(v).first(g.in_position(v, t));
    for (const auto& e : es) out.push_back({e.u, e.t});
  }
  return out;
}

GraphStats graph_stats(const TemporalGraph& g) {
  GraphStats s;
  s.node_count = g.num_nodes();
  s.edge_count = g.num_edges();
  std::unordered_set<Time> times;
  for (const auto& e : g.edges()) times.insert(e.t);
  s.distinct_times = times.size();
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    s.max_out_degree = std::max(s.max_out_degree, g.out_degree(v));
    s.max_in_degree = std::max(s.max_in_degree, g.in_degree(v));
  }
  s.avg_out_degree = s.node_count == 0 ? 0.0
                                       : static_cast<double>(s.edge_count) /
                                             static_cast<double>(s.node_count);
  return s;
}

}  // namespace thx
