#include "bnfix/cycles.hpp"

#include <algorithm>
#include <functional>

#include "bnfix/error.hpp"

namespace bnfix {

namespace {

// Johnson's elementary circuit search on the underlying simple digraph; each
// vertex circuit is expanded into one SignedCycle per choice of parallel sign.
class CycleEnumerator {
public:
  CycleEnumerator(const SignedDigraph& g, const std::vector<bool>& removed, std::size_t cap,
                  std::function<bool(const SignedCycle&)> sink)
      : g_(g), removed_(removed), cap_(cap), sink_(std::move(sink)), blocked_(g.size(), false),
        blocked_by_(g.size()) {}

  // Returns false if the sink asked to stop early.
  bool run() {
    for (start_ = 0; start_ < g_.size(); ++start_) {
      if (removed_[start_])
        continue;
      std::fill(blocked_.begin(), blocked_.end(), false);
      for (auto& b : blocked_by_)
        b.clear();
      circuit(start_);
      if (stopped_)
        return false;
    }
    return true;
  }

private:
  bool alive(std::size_t w) const { return w >= start_ && !removed_[w]; }

  void unblock(std::size_t u) {
    blocked_[u] = false;
    auto pending = std::move(blocked_by_[u]);
    blocked_by_[u].clear();
    for (auto w : pending)
      if (blocked_[w])
        unblock(w);
  }

  bool circuit(std::size_t v) {
    bool found = false;
    stack_.push_back(v);
    blocked_[v] = true;
    for (auto w : g_.out_neighbors(v)) {
      if (stopped_)
        break;
      if (!alive(w))
        continue;
      if (w == start_) {
        emit();
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (auto w : g_.out_neighbors(v)) {
        if (!alive(w))
          continue;
        auto& b = blocked_by_[w];
        if (std::find(b.begin(), b.end(), v) == b.end())
          b.push_back(v);
      }
    }
    stack_.pop_back();
    return found;
  }

  void emit() {
    const std::size_t len = stack_.size();
    SignedCycle cycle;
    cycle.vertices = stack_;
    cycle.arc_signs.assign(len, Sign::Positive);
    expand(cycle, 0, Sign::Positive);
  }

  void expand(SignedCycle& cycle, std::size_t i, Sign acc) {
    if (stopped_)
      return;
    const std::size_t len = cycle.vertices.size();
    if (i == len) {
      if (++produced_ > cap_)
        throw ResourceError("cycle enumeration exceeded the cap of " + std::to_string(cap_));
      cycle.sign = acc;
      if (!sink_(cycle))
        stopped_ = true;
      return;
    }
    const SignMask m = g_.signs(cycle.vertices[i], cycle.vertices[(i + 1) % len]);
    for (Sign s : {Sign::Positive, Sign::Negative}) {
      if (!(m & sign_bit(s)))
        continue;
      cycle.arc_signs[i] = s;
      expand(cycle, i + 1, acc * s);
    }
  }

  const SignedDigraph& g_;
  const std::vector<bool>& removed_;
  std::size_t cap_;
  std::function<bool(const SignedCycle&)> sink_;
  std::vector<bool> blocked_;
  std::vector<std::vector<std::size_t>> blocked_by_;
  std::vector<std::size_t> stack_;
  std::size_t start_ = 0;
  std::size_t produced_ = 0;
  bool stopped_ = false;
};

// Tarjan, iterative. Returns component id per vertex (removed vertices get npos).
std::vector<std::size_t> strong_components(const SignedDigraph& g, const std::vector<bool>& removed,
                                           std::size_t& count) {
  const std::size_t n = g.size();
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, npos), low(n, 0), comp(n, npos);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> work;
  std::size_t next = 0;
  count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (removed[root] || index[root] != npos)
      continue;
    work.emplace_back(root, 0);
    while (!work.empty()) {
      auto& [v, pos] = work.back();
      if (pos == 0 && index[v] == npos) {
        index[v] = low[v] = next++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      const auto nbrs = g.out_neighbors(v);
      bool descended = false;
      while (pos < nbrs.size()) {
        const std::size_t w = nbrs[pos++];
        if (removed[w])
          continue;
        if (index[w] == npos) {
          work.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[w])
          low[v] = std::min(low[v], index[w]);
      }
      if (descended)
        continue;
      const std::size_t done = v;
      if (low[done] == index[done]) {
        while (true) {
          const std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
          if (w == done)
            break;
        }
        ++count;
      }
      work.pop_back();
      if (!work.empty()) {
        const std::size_t parent = work.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

constexpr std::size_t kSubsetSearchLimit = 20;

// Held-Karp style search over simple paths inside one strong component:
// reach[mask][v] holds the signs of paths from the start through `mask`
// ending at v. Each cycle is examined from its smallest local vertex.
bool component_has_cycle_of_sign(const SignedDigraph& g, const std::vector<std::size_t>& verts,
                                 SignMask target) {
  const std::size_t m = verts.size();
  std::vector<std::size_t> local(g.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < m; ++i)
    local[verts[i]] = i;

  std::vector<SignMask> reach;
  for (std::size_t s = 0; s + 1 < m; ++s) {
    const std::size_t k = m - s - 1;
    const std::size_t masks = std::size_t{1} << k;
    reach.assign(masks * k, 0);
    const auto bit_of = [&](std::size_t li) { return li - s - 1; };

    for (auto w : g.out_neighbors(verts[s])) {
      const std::size_t lw = local[w];
      if (lw == static_cast<std::size_t>(-1) || lw <= s)
        continue;
      const std::size_t b = bit_of(lw);
      reach[(std::size_t{1} << b) * k + b] |= g.signs(verts[s], w);
    }
    for (std::size_t mask = 1; mask < masks; ++mask) {
      for (std::size_t b = 0; b < k; ++b) {
        const SignMask p = reach[mask * k + b];
        if (p == 0)
          continue;
        const std::size_t v = verts[b + s + 1];
        const SignMask close = g.signs(v, verts[s]);
        if (close != 0 && (times(p, close) & target) != 0)
          return true;
        for (auto w : g.out_neighbors(v)) {
          const std::size_t lw = local[w];
          if (lw == static_cast<std::size_t>(-1) || lw <= s)
            continue;
          const std::size_t bw = bit_of(lw);
          if (mask & (std::size_t{1} << bw))
            continue;
          reach[(mask | (std::size_t{1} << bw)) * k + bw] |= times(p, g.signs(v, w));
        }
      }
    }
  }
  return false;
}

} // namespace

std::vector<SignedCycle> enumerate_cycles(const SignedDigraph& g, std::size_t cap) {
  std::vector<SignedCycle> out;
  const std::vector<bool> none(g.size(), false);
  CycleEnumerator(g, none, cap, [&out](const SignedCycle& c) {
    out.push_back(c);
    return true;
  }).run();
  return out;
}

bool is_acyclic(const SignedDigraph& g, const std::vector<bool>& removed) {
  const std::size_t n = g.size();
  std::vector<std::size_t> indeg(n, 0);
  std::size_t alive = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (removed[v])
      continue;
    ++alive;
    for (auto u : g.in_neighbors(v))
      if (!removed[u])
        ++indeg[v];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (!removed[v] && indeg[v] == 0)
      ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t u = ready.back();
    ready.pop_back();
    ++seen;
    for (auto w : g.out_neighbors(u))
      if (!removed[w] && --indeg[w] == 0)
        ready.push_back(w);
  }
  return seen == alive;
}

bool is_acyclic(const SignedDigraph& g, std::span<const std::size_t> removed) {
  return is_acyclic(g, vertex_mask(g.size(), removed));
}

bool has_cycle_of_sign(const SignedDigraph& g, const std::vector<bool>& removed, Sign sign,
                       std::size_t cap) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!removed[v] && g.has_arc(v, v, sign))
      return true;

  std::size_t count = 0;
  const auto comp = strong_components(g, removed, count);
  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!removed[v])
      members[comp[v]].push_back(v);

  for (const auto& verts : members) {
    if (verts.size() < 2)
      continue;
    if (verts.size() <= kSubsetSearchLimit) {
      if (component_has_cycle_of_sign(g, verts, sign_bit(sign)))
        return true;
      continue;
    }
    std::vector<bool> outside(g.size(), true);
    for (auto v : verts)
      outside[v] = false;
    bool found = false;
    CycleEnumerator(g, outside, cap, [&](const SignedCycle& c) {
      found = c.sign == sign;
      return !found;
    }).run();
    if (found)
      return true;
  }
  return false;
}

bool is_pfvs(const SignedDigraph& g, std::span<const std::size_t> p, std::size_t cap) {
  return !has_cycle_of_sign(g, vertex_mask(g.size(), p), Sign::Positive, cap);
}

bool is_minimal_fvs(const SignedDigraph& g, std::span<const std::size_t> f) {
  auto removed = vertex_mask(g.size(), f);
  if (!is_acyclic(g, removed))
    return false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!removed[v])
      continue;
    removed[v] = false;
    const bool still = is_acyclic(g, removed);
    removed[v] = true;
    if (still)
      return false;
  }
  return true;
}

namespace {

template <typename Accept>
Transversal smallest_subset(const SignedDigraph& g, Accept accept) {
  const std::size_t n = g.size();
  if (n > brute_transversal_max_n)
    throw ResourceError("brute-force transversal search is limited to " +
                        std::to_string(brute_transversal_max_n) + " vertices");
  std::vector<bool> removed(n, false);
  for (std::size_t k = 0; k <= n; ++k) {
    // lexicographically first k-subset
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i)
      pick[i] = i;
    while (true) {
      std::fill(removed.begin(), removed.end(), false);
      for (auto v : pick)
        removed[v] = true;
      if (accept(removed))
        return {k, pick};
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1)
        --i;
      if (i == 0)
        break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j)
        pick[j] = pick[j - 1] + 1;
    }
  }
  return {n, {}};
}

} // namespace

Transversal brute_tau(const SignedDigraph& g) {
  return smallest_subset(g, [&g](const std::vector<bool>& removed) { return is_acyclic(g, removed); });
}

Transversal brute_tau_plus(const SignedDigraph& g) {
  return smallest_subset(g, [&g](const std::vector<bool>& removed) {
    return !has_cycle_of_sign(g, removed, Sign::Positive);
  });
}

} // namespace bnfix
