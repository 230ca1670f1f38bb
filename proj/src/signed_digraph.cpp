#include "bnfix/signed_digraph.hpp"

#include <algorithm>

#include "bnfix/error.hpp"

namespace bnfix {

SignedDigraph::SignedDigraph(std::size_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), out_begin_(n + 1, 0), out_neighbors_(n), in_neighbors_(n),
      mask_(n * n, 0) {
  for (const auto& a : arcs_)
    if (a.source >= n || a.target >= n)
      throw InvalidSetError("arc endpoint out of range");
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

  for (const auto& a : arcs_) {
    ++out_begin_[a.source + 1];
    SignMask& m = mask_[a.source * n + a.target];
    if (m == 0) {
      out_neighbors_[a.source].push_back(a.target);
      in_neighbors_[a.target].push_back(a.source);
    }
    m |= sign_bit(a.sign);
  }
  for (std::size_t u = 0; u < n; ++u)
    out_begin_[u + 1] += out_begin_[u];
  for (auto& in : in_neighbors_)
    std::sort(in.begin(), in.end());
}

SignedDigraph SignedDigraph::without_vertices(const std::vector<bool>& removed) const {
  std::vector<Arc> kept;
  for (const auto& a : arcs_)
    if (!removed[a.source] && !removed[a.target])
      kept.push_back(a);
  return SignedDigraph(n_, std::move(kept));
}

SignedDigraph derive(const BooleanNetwork& net) {
  std::vector<Arc> arcs;
  for (std::size_t v = 0; v < net.size(); ++v) {
    for (const auto& r : net.regulators(v)) {
      if (r.positive)
        arcs.push_back({r.source, v, Sign::Positive});
      if (r.negative)
        arcs.push_back({r.source, v, Sign::Negative});
    }
  }
  return SignedDigraph(net.size(), std::move(arcs));
}

std::vector<Degree> degrees(const SignedDigraph& g) {
  std::vector<Degree> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    out[v].in = g.in_neighbors(v).size();
    out[v].out = g.out_neighbors(v).size();
    out[v].total = out[v].in + out[v].out;
  }
  return out;
}

std::vector<bool> vertex_mask(std::size_t n, std::span<const std::size_t> vertices) {
  std::vector<bool> mask(n, false);
  for (auto v : vertices) {
    if (v >= n)
      throw InvalidSetError("vertex " + std::to_string(v) + " out of range");
    mask[v] = true;
  }
  return mask;
}

} // namespace bnfix
