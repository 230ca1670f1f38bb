#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "bnfix/io.hpp"
#include "bnfix/signed_digraph.hpp"

namespace bnfix::testing {

inline BooleanNetwork fixture(const std::string& name) {
  return load_network(std::string(BNFIX_NETWORKS_DIR) + "/" + name + ".bn");
}

/// 1-based vertex labels to 0-based indices.
inline std::vector<std::size_t> zero_based(std::initializer_list<std::size_t> labels) {
  std::vector<std::size_t> out;
  for (auto v : labels)
    out.push_back(v - 1);
  return out;
}

/// 1-based (source, target, sign) triples.
struct Labeled {
  std::size_t source;
  std::size_t target;
  int sign;
};

inline std::vector<Arc> arcs_from(std::initializer_list<Labeled> labeled) {
  std::vector<Arc> arcs;
  for (const auto& a : labeled)
    arcs.push_back({a.source - 1, a.target - 1, a.sign > 0 ? Sign::Positive : Sign::Negative});
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

/// Seven vertices, loops at 1 (+), 2 (-), 3 (+), 4 (-); P = {1, 3} and
/// F \ P = {2, 4} is a compatible split.
inline SignedDigraph seven_vertex_graph() {
  return SignedDigraph(7, arcs_from({{1, 1, 1}, {3, 3, 1}, {6, 1, 1}, {6, 2, 1}, {7, 6, 1},
                                     {7, 1, 1}, {7, 2, 1}, {4, 3, 1}, {1, 7, 1}, {2, 2, -1},
                                     {4, 4, -1}, {1, 4, -1}, {3, 4, -1}, {3, 6, -1}, {5, 1, -1},
                                     {2, 7, -1}, {1, 6, -1}}));
}

/// The signed arcs of loops5.bn, drawn by hand from its formulas.
inline std::vector<Arc> loops5_arcs() {
  return arcs_from({{5, 1, 1}, {2, 1, -1}, {1, 2, 1}, {3, 2, 1}, {3, 2, -1}, {5, 2, 1},
                    {4, 3, 1}, {1, 3, -1}, {5, 3, -1}, {3, 3, 1}, {3, 4, 1}, {3, 4, -1},
                    {5, 4, 1}, {4, 4, 1}, {4, 5, 1}});
}

} // namespace bnfix::testing
