#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "thx/graph.hpp"

namespace fixture {

inline std::string data_path(const std::string& name) {
  return std::string(THX_DATA_DIR) + "/" + name;
}

inline thx::TemporalGraph toy10() { return thx::load_edge_file(data_path("toy10.txt"), false); }
inline thx::TemporalGraph toy5() { return thx::load_edge_file(data_path("toy5.txt"), false); }

using LabeledEdge = std::tuple<std::string, std::string, thx::Time, thx::Time>;

inline std::vector<LabeledEdge> labeled_edges(const thx::TemporalGraph& g) {
  std::vector<LabeledEdge> out;
  for (const auto& e : g.edges()) out.emplace_back(g.label(e.u), g.label(e.v), e.t, e.lambda);
  std::sort(out.begin(), out.end());
  return out;
}

inline thx::NodeId id(const thx::TemporalGraph& g, const std::string& label) {
  return *g.find(label);
}

inline const std::vector<std::string> kToy10Nodes = {"a", "b", "c", "d", "e",
                                                    "f", "g", "h", "i", "j"};

// Outward values per order, columns a..j.
inline const std::vector<std::vector<unsigned>> kToy10Outward = {
    {3, 2, 2, 4, 4, 4, 5, 5, 2, 3},
    {1, 0, 0, 1, 2, 3, 2, 1, 0, 1},
    {1, 0, 0, 1, 1, 1, 1, 0, 0, 1},
    {1, 0, 0, 1, 0, 1, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
};

// Static degree, H-index and core number, columns a..j.
inline const std::vector<std::vector<unsigned>> kToy10Static = {
    {3, 2, 2, 4, 4, 4, 5, 5, 2, 3},
    {2, 2, 2, 3, 3, 4, 3, 3, 2, 2},
    {2, 2, 2, 3, 3, 3, 3, 3, 2, 2},
};

}  // namespace fixture
