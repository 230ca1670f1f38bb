#include <algorithm>
#include <functional>
#include <queue>

#include "bnfix/cycles.hpp"
#include "bnfix/error.hpp"
#include "bnfix/pfvs.hpp"

namespace bnfix {

namespace {

struct Partition {
  std::vector<bool> in_f;
  std::vector<bool> in_p;
};

Partition partition(const SignedDigraph& g, std::span<const std::size_t> f,
                    std::span<const std::size_t> p) {
  Partition part{vertex_mask(g.size(), f), vertex_mask(g.size(), p)};
  for (std::size_t v = 0; v < g.size(); ++v)
    if (part.in_p[v] && !part.in_f[v])
      throw InvalidSetError("P must be contained in F");
  return part;
}

// Kahn on G - F; `pick` chooses which ready vertex goes next.
template <class Pick>
std::vector<std::size_t> topological_rest(const SignedDigraph& g, const std::vector<bool>& in_f,
                                          Pick pick) {
  const std::size_t n = g.size();
  std::vector<std::size_t> indeg(n, 0);
  std::size_t remaining = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_f[v])
      continue;
    ++remaining;
    for (auto u : g.in_neighbors(v))
      if (!in_f[u])
        ++indeg[v];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (!in_f[v] && indeg[v] == 0)
      ready.push_back(v);
  std::vector<std::size_t> out;
  while (!ready.empty()) {
    const std::size_t v = pick(ready);
    out.push_back(v);
    for (auto w : g.out_neighbors(v))
      if (!in_f[w] && w != v && --indeg[w] == 0)
        ready.push_back(w);
  }
  if (out.size() != remaining)
    throw InvalidSetError("F is not a feedback vertex set");
  return out;
}

template <class Pick, class Arrange>
Schedule build(const SignedDigraph& g, std::span<const std::size_t> f, std::span<const std::size_t> p,
               Pick pick, Arrange arrange) {
  const auto part = partition(g, f, p);
  std::vector<std::size_t> head, tail;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (part.in_p[v])
      head.push_back(v);
    else if (part.in_f[v])
      tail.push_back(v);
  }
  auto middle = topological_rest(g, part.in_f, pick);
  arrange(head);
  arrange(tail);
  std::vector<std::size_t> order;
  order.reserve(g.size());
  order.insert(order.end(), head.begin(), head.end());
  order.insert(order.end(), middle.begin(), middle.end());
  order.insert(order.end(), tail.begin(), tail.end());
  return Schedule(std::move(order));
}

} // namespace

Schedule compatible_order(const SignedDigraph& g, std::span<const std::size_t> f,
                          std::span<const std::size_t> p) {
  auto smallest = [](std::vector<std::size_t>& ready) {
    auto it = std::min_element(ready.begin(), ready.end());
    const std::size_t v = *it;
    ready.erase(it);
    return v;
  };
  return build(g, f, p, smallest, [](std::vector<std::size_t>&) {});
}

Schedule random_compatible_order(const SignedDigraph& g, std::span<const std::size_t> f,
                                 std::span<const std::size_t> p, std::mt19937_64& rng) {
  auto any = [&rng](std::vector<std::size_t>& ready) {
    std::uniform_int_distribution<std::size_t> dist(0, ready.size() - 1);
    const std::size_t i = dist(rng);
    std::swap(ready[i], ready.back());
    const std::size_t v = ready.back();
    ready.pop_back();
    return v;
  };
  return build(g, f, p, any, [&rng](std::vector<std::size_t>& vs) { std::shuffle(vs.begin(), vs.end(), rng); });
}

bool is_compatible(const SignedDigraph& g, std::span<const std::size_t> f,
                   std::span<const std::size_t> p, const Schedule& pi) {
  const std::size_t n = g.size();
  if (pi.order().size() != n)
    return false;
  const auto part = partition(g, f, p);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i)
    pos[pi.order()[i]] = i;

  // P occupies a prefix and F \ P a suffix of pi.
  const std::size_t head = std::count(part.in_p.begin(), part.in_p.end(), true);
  std::size_t tail = 0;
  for (std::size_t v = 0; v < n; ++v)
    tail += part.in_f[v] && !part.in_p[v];
  for (std::size_t v = 0; v < n; ++v) {
    if (part.in_p[v] != (pos[v] < head))
      return false;
    if ((part.in_f[v] && !part.in_p[v]) != (pos[v] >= n - tail))
      return false;
  }
  for (const auto& a : g.arcs())
    if (!part.in_f[a.source] && !part.in_f[a.target] && pos[a.source] >= pos[a.target])
      return false;
  return true;
}

std::vector<std::size_t> complete_fvs(const SignedDigraph& g, std::span<const std::size_t> p) {
  const std::size_t n = g.size();
  const auto in_p = vertex_mask(n, p);
  std::vector<bool> in_f(n, true);
  for (std::size_t v = 0; v < n; ++v) {
    if (in_p[v])
      continue;
    in_f[v] = false;
    if (!is_acyclic(g, in_f))
      in_f[v] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (in_f[v])
      out.push_back(v);
  return out;
}

} // namespace bnfix
