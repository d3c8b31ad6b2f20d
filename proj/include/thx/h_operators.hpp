#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "thx/graph.hpp"

namespace thx {

/// Index values: degrees and H-indices.
using HValue = std::uint32_t;

/// Largest i such that at least i elements of `values` are >= i.
/// H(empty) = 0. Linear time: values above |S| are clamped into one bucket.
HValue h_operator(std::span<const HValue> values);

/// Same, reusing `scratch` as the histogram buffer.
HValue h_operator(std::span<const HValue> values, std::vector<HValue>& scratch);

struct TimedValue {
  Time time = 0;
  HValue value = 0;
};

/// Append-only list of (t', x) pairs.
using TimedValueList = std::vector<TimedValue>;

/// H over the values whose time is strictly greater than t.
HValue h_t_operator(std::span<const TimedValue> list, Time t);

/// Static H-index on an undirected graph.
std::vector<HValue> static_h_index(const StaticGraph& g);

/// n-th order static H-index: order 0 is the degree, each further order
/// applies H to the neighbors' previous values. Stops early once a fixed
/// point is reached.
std::vector<HValue> static_nth_order_h_index(const StaticGraph& g, std::size_t n);

/// Core numbers by bucket peeling, O(|V| + |E|).
std::vector<HValue> k_core(const StaticGraph& g);

/// (k,h)-core numbers. Edge direction is ignored; a neighbor counts only when
/// at least `h` temporal edges (either direction) join the two nodes.
std::vector<HValue> kh_core(const TemporalGraph& g, std::size_t h);

}  // namespace thx
