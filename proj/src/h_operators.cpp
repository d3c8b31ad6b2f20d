#include "thx/h_operators.hpp"

#include <algorithm>
#include <map>

#include "thx/error.hpp"

namespace thx {

HValue h_operator(std::span<const HValue> values, std::vector<HValue>& scratch) {
  const std::size_t n = values.size();
  if (n == 0) return 0;
  scratch.assign(n + 1, 0);
  for (HValue x : values) ++scratch[std::min<std::size_t>(x, n)];
  // Walk down from the largest candidate, accumulating #{x >= i}.
  std::size_t at_least = 0;
  for (std::size_t i = n; i > 0; --i) {
    at_least += scratch[i];
    if (at_least >= i) return static_cast<HValue>(i);
  }
  return 0;
}

HValue h_operator(std::span<const HValue> values) {
  std::vector<HValue> scratch;
  return h_operator(values, scratch);
}

HValue h_t_operator(std::span<const TimedValue> list, Time t) {
  std::vector<HValue> filtered;
  filtered.reserve(list.size());
  for (const auto& [time, value] : list) {
    if (time > t) filtered.push_back(value);
  }
  return h_operator(filtered);
}

std::vector<HValue> static_h_index(const StaticGraph& g) {
  return static_nth_order_h_index(g, 1);
}

std::vector<HValue> static_nth_order_h_index(const StaticGraph& g, std::size_t n) {
  const std::size_t nv = g.num_nodes();
  std::vector<HValue> cur(nv);
  for (NodeId v = 0; v < nv; ++v) cur[v] = static_cast<HValue>(g.degree(v));
  std::vector<HValue> next(nv), buffer, scratch;
  for (std::size_t order = 1; order <= n; ++order) {
    for (NodeId u = 0; u < nv; ++u) {
      buffer.clear();
      for (NodeId v : g.adjacency[u]) buffer.push_back(cur[v]);
      next[u] = h_operator(buffer, scratch);
    }
    if (next == cur) break;
    std::swap(cur, next);
  }
  return cur;
}

std::vector<HValue> k_core(const StaticGraph& g) {
  // Batagelj-Zaversnik bucket peeling.
  const std::size_t nv = g.num_nodes();
  std::vector<HValue> deg(nv);
  HValue max_deg = 0;
  for (NodeId v = 0; v < nv; ++v) {
    deg[v] = static_cast<HValue>(g.degree(v));
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (HValue d : deg) ++bin[d];
  std::size_t start = 0;
  for (auto& b : bin) {
    std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<NodeId> vert(nv);
  std::vector<std::size_t> pos(nv);
  for (NodeId v = 0; v < nv; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (HValue d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;

  for (std::size_t i = 0; i < nv; ++i) {
    NodeId v = vert[i];
    for (NodeId u : g.adjacency[v]) {
      if (deg[u] > deg[v]) {
        HValue du = deg[u];
        std::size_t pu = pos[u];
        std::size_t pw = bin[du];
        NodeId w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return deg;
}

std::vector<HValue> kh_core(const TemporalGraph& g, std::size_t h) {
  if (h < 1) throw PreconditionError("(k,h)-core needs h >= 1");
  std::map<std::pair<NodeId, NodeId>, std::size_t> multiplicity;
  for (const auto& e : g.edges()) {
    auto key = std::minmax(e.u, e.v);
    ++multiplicity[{key.first, key.second}];
  }
  StaticGraph s;
  s.directed = false;
  s.adjacency.resize(g.num_nodes());
  for (const auto& [pair, count] : multiplicity) {
    if (count < h) continue;
    s.adjacency[pair.first].push_back(pair.second);
    s.adjacency[pair.second].push_back(pair.first);
  }
  for (auto& a : s.adjacency) std::sort(a.begin(), a.end());
  return k_core(s);
}

}  // namespace thx
