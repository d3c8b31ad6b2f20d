#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thx {

using NodeId = std::uint32_t;
using Time = std::int64_t;

/// Sentinel for "no upper bound" (root time of inward queries, open intervals).
inline constexpr Time kInfinity = std::numeric_limits<Time>::max();

enum class Direction { kOut, kIn };

std::string_view to_string(Direction d);
Direction parse_direction(std::string_view s);

/// Directed temporal edge: traversable from u to v, departing at t and
/// arriving at t + lambda.
struct TemporalEdge {
  NodeId u = 0;
  NodeId v = 0;
  Time t = 0;
  Time lambda = 1;

  Time arrival() const noexcept { return t + lambda; }

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

struct NodeTime {
  NodeId node = 0;
  Time time = 0;

  friend bool operator==(const NodeTime&, const NodeTime&) = default;
  friend auto operator<=>(const NodeTime&, const NodeTime&) = default;
};

/// Immutable temporal graph in edge-stream form.
///
/// Edges are kept sorted by availability time (stable with respect to the
/// order given at construction). Per-node out-edge lists sorted by departure
/// time and in-edge lists sorted by arrival time back the time-dependent
/// degree queries.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  /// Throws PreconditionError on self-loops, lambda < 1, negative times or
  /// endpoints >= num_nodes. Empty `labels` means decimal ids.
  TemporalGraph(std::size_t num_nodes, std::vector<TemporalEdge> edges,
                std::vector<std::string> labels = {});

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  std::span<const TemporalEdge> edges() const noexcept { return edges_; }

  /// True iff every edge has the same lambda (vacuously true when empty).
  bool uniform_lambda() const noexcept { return uniform_lambda_; }
  /// The common lambda when uniform and non-empty.
  std::optional<Time> common_lambda() const noexcept;

  /// Max over edges of t + lambda; 0 for the empty graph.
  Time max_arrival() const noexcept { return max_arrival_; }

  /// Out-edges of u sorted ascending by t.
  std::span<const TemporalEdge> out_edges(NodeId u) const;
  /// In-edges of u sorted ascending by t + lambda.
  std::span<const TemporalEdge> in_edges(NodeId u) const;

  std::size_t out_degree(NodeId u) const { return out_edges(u).size(); }
  std::size_t in_degree(NodeId u) const { return in_edges(u).size(); }

  /// Number of out-edges of u with t_e >= t.
  std::size_t out_degree_at(NodeId u, Time t) const;
  /// Number of in-edges of u with t_e + lambda_e <= t.
  std::size_t in_degree_at(NodeId u, Time t) const;

  /// Index into out_edges(u) of the first edge with t_e >= t.
  std::size_t out_position(NodeId u, Time t) const;
  /// Number of in-edges of u with arrival <= t (an index into in_edges(u)).
  std::size_t in_position(NodeId u, Time t) const;

  const std::string& label(NodeId u) const { return labels_.at(u); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<TemporalEdge> edges_;
  std::vector<std::string> labels_;
  bool uniform_lambda_ = true;
  Time max_arrival_ = 0;

  std::vector<std::size_t> out_offsets_;
  std::vector<TemporalEdge> out_;
  std::vector<std::size_t> in_offsets_;
  std::vector<TemporalEdge> in_;
};

/// Aggregated static graph: one edge per tail/head pair, no self loops.
struct StaticGraph {
  bool directed = true;
  /// Sorted, duplicate-free neighbor lists (out-neighbors when directed).
  std::vector<std::vector<NodeId>> adjacency;

  std::size_t num_nodes() const noexcept { return adjacency.size(); }
  std::size_t num_edges() const noexcept;
  std::size_t degree(NodeId u) const { return adjacency.at(u).size(); }
};

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t distinct_times = 0;
  std::size_t max_out_degree = 0;
  std::size_t max_in_degree = 0;
  double avg_out_degree = 0.0;
};

/// Parses the whitespace separated edge list ("u v t" or "u v t lambda").
/// Lines starting with '#' or '%' and blank lines are skipped. In undirected
/// mode every line yields both directions with the same t and lambda.
TemporalGraph load_edge_stream(std::istream& in, bool directed = true);
TemporalGraph load_edge_stream_from_string(std::string_view text,
                                           bool directed = true);
TemporalGraph load_edge_file(const std::filesystem::path& path,
                             bool directed = true);

/// Writes the graph back in the edge-list format (always four columns).
void write_edge_stream(std::ostream& out, const TemporalGraph& g);

/// Keeps edges with t >= a and t + lambda <= b.
TemporalGraph restrict_interval(const TemporalGraph& g, Time a, Time b);

TemporalGraph remove_isolated_nodes(const TemporalGraph& g);

/// Induced temporal subgraph on `keep` (re-indexed in ascending id order,
/// labels carried along).
TemporalGraph induced_subgraph(const TemporalGraph& g,
                               std::span<const NodeId> keep);

StaticGraph aggregate(const TemporalGraph& g);
/// Undirected version of a static graph (u~v iff u->v or v->u).
StaticGraph symmetrized(const StaticGraph& g);

/// Edge (u,v,t,lambda) becomes (v,u,t_max - t,lambda), t_max = max(t+lambda).
TemporalGraph temporal_transpose(const TemporalGraph& g);

std::vector<NodeTime> temporal_neighborhood(const TemporalGraph& g, NodeId v,
                                            Time t, Direction direction);

GraphStats graph_stats(const TemporalGraph& g);

}  // namespace thx
