#include "bnfix/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

#include "bnfix/error.hpp"
#include "bnfix/ichain.hpp"

namespace bnfix::oracle {

namespace {

void load(State& x, std::uint64_t index) {
  for (std::size_t i = 0; i < x.size(); ++i)
    x.set(i, ((index >> i) & 1U) != 0);
}

State step(const BooleanNetwork& net, const State& x) {
  State y(x.size());
  for (std::size_t v = 0; v < net.size(); ++v)
    y.set(v, net.eval(v, x));
  return y;
}

State steps(const BooleanNetwork& net, State x, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i)
    x = step(net, x);
  return x;
}

State sweep(const BooleanNetwork& net, const std::vector<std::size_t>& order, State x) {
  for (auto v : order)
    x.set(v, net.eval(v, x));
  return x;
}

void guard(const BooleanNetwork& net, std::size_t limit) {
  if (net.size() > limit)
    throw ResourceError("exhaustive check limited to " + std::to_string(limit) + " components, got " +
                        std::to_string(net.size()));
}

// Calls `visit(x)` on every state; returns false as soon as `visit` does.
bool all_states(std::size_t n, const std::function<bool(const State&)>& visit) {
  State x(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < total; ++i) {
    load(x, i);
    if (!visit(x))
      return false;
  }
  return true;
}

// Same map for every state, returned if constant.
std::optional<State> constant_image(std::size_t n, const std::function<State(const State&)>& map) {
  std::optional<State> image;
  const bool constant = all_states(n, [&](const State& x) {
    State y = map(x);
    if (!image) {
      image = std::move(y);
      return true;
    }
    return y == *image;
  });
  return constant ? image : std::nullopt;
}

void require_no_positive_cycle(const BooleanNetwork& net) {
  if (brute_has_positive_cycle(SignedDigraph(net.size(), brute_arcs(net))))
    throw InvalidSetError("the interaction graph has a positive cycle");
}

} // namespace

std::vector<State> brute_fixed_points(const BooleanNetwork& net) {
  guard(net, max_fixed_point_n);
  const std::size_t n = net.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned workers = n >= 16 ? std::max(1U, std::thread::hardware_concurrency()) : 1U;
  std::vector<std::vector<State>> found(workers);

  auto work = [&](unsigned w) {
    State x(n);
    for (std::uint64_t i = total * w / workers; i < total * (w + 1) / workers; ++i) {
      load(x, i);
      bool fixed = true;
      for (std::size_t v = 0; v < n && fixed; ++v)
        fixed = net.eval(v, x) == x[v];
      if (fixed)
        found[w].push_back(x);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
  }

  std::vector<State> out;
  for (auto& part : found)
    out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arc> brute_arcs(const BooleanNetwork& net) {
  guard(net, max_fixed_point_n);
  const std::size_t n = net.size();
  std::vector<std::uint8_t> seen(n * n, 0);
  all_states(n, [&](const State& x) {
    for (std::size_t u = 0; u < n; ++u) {
      if (x[u])
        continue;
      State raised = x;
      raised.set(u, true);
      for (std::size_t v = 0; v < n; ++v) {
        const bool lo = net.eval(v, x);
        const bool hi = net.eval(v, raised);
        if (!lo && hi)
          seen[u * n + v] |= 1;
        if (lo && !hi)
          seen[u * n + v] |= 2;
      }
    }
    return true;
  });
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (seen[u * n + v] & 1)
        arcs.push_back({u, v, Sign::Positive});
      if (seen[u * n + v] & 2)
        arcs.push_back({u, v, Sign::Negative});
    }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

BruteChain brute_i_chain(const BooleanNetwork& net) {
  guard(net, max_fixed_point_n);
  const std::size_t n = net.size();
  BruteChain chain;
  chain.constants.assign(n, std::nullopt);
  std::vector<std::optional<bool>> fixed(n);
  std::size_t previous = 0;
  while (true) {
    std::vector<std::optional<bool>> value(n);
    std::vector<bool> varies(n, false);
    all_states(n, [&](const State& x) {
      for (std::size_t u = 0; u < n; ++u)
        if (fixed[u] && x[u] != *fixed[u])
          return true;
      for (std::size_t v = 0; v < n; ++v) {
        const bool b = net.eval(v, x);
        if (!value[v])
          value[v] = b;
        else if (*value[v] != b)
          varies[v] = true;
      }
      return true;
    });
    std::vector<std::size_t> level;
    for (std::size_t v = 0; v < n; ++v)
      if (!varies[v])
        level.push_back(v);
    if (level.size() == previous)
      break;
    for (auto v : level)
      if (!fixed[v])
        fixed[v] = value[v];
    previous = level.size();
    chain.levels.push_back(std::move(level));
  }
  chain.constants = fixed;
  return chain;
}

bool brute_has_positive_cycle(const SignedDigraph& g) {
  const std::size_t n = g.size();
  std::vector<bool> on_path(n, false);
  // Cycles are rooted at their smallest vertex.
  std::function<bool(std::size_t, std::size_t, Sign)> dfs = [&](std::size_t root, std::size_t u, Sign sign) {
    for (const auto& arc : g.out_arcs(u)) {
      const std::size_t v = arc.target;
      if (v < root)
        continue;
      const Sign s = sign * arc.sign;
      if (v == root) {
        if (s == Sign::Positive)
          return true;
        continue;
      }
      if (on_path[v])
        continue;
      on_path[v] = true;
      const bool hit = dfs(root, v, s);
      on_path[v] = false;
      if (hit)
        return true;
    }
    return false;
  };
  for (std::size_t root = 0; root < n; ++root) {
    on_path[root] = true;
    const bool hit = dfs(root, root, Sign::Positive);
    on_path[root] = false;
    if (hit)
      return true;
  }
  return false;
}

UniquenessVerdict check_uniqueness(const BooleanNetwork& net) {
  guard(net, max_exhaustive_n);
  require_no_positive_cycle(net);
  const std::size_t n = net.size();
  UniquenessVerdict verdict;

  const auto fps = brute_fixed_points(net);
  verdict.fixed_point_count = fps.size();
  if (fps.size() == 1)
    verdict.fixed_point = fps.front();

  const auto sync = constant_image(n, [&](const State& x) { return steps(net, x, n); });
  verdict.synchronous_converges = sync.has_value();

  auto try_order = [&](const std::vector<std::size_t>& order) {
    if (constant_image(n, [&](const State& x) { return sweep(net, order, x); })) {
      verdict.schedule_converges = true;
      verdict.witness = Schedule(order);
      return true;
    }
    return false;
  };

  // Components ordered by the level at which they get fixed.
  if (verdict.fixed_point) {
    const auto chain = brute_i_chain(net);
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    for (const auto& level : chain.levels)
      for (auto v : level)
        if (!placed[v]) {
          placed[v] = true;
          order.push_back(v);
        }
    for (std::size_t v = 0; v < n; ++v)
      if (!placed[v])
        order.push_back(v);
    try_order(order);
  }
  if (!verdict.schedule_converges) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (n <= 7) {
      do {
        if (try_order(order))
          break;
      } while (std::next_permutation(order.begin(), order.end()));
    } else {
      std::mt19937_64 rng(n);
      for (int i = 0; i < 2000 && !try_order(order); ++i)
        std::shuffle(order.begin(), order.end(), rng);
    }
  }

  State zero(n);
  const State a = steps(net, zero, n);
  if (fps.empty())
    verdict.stationarity_holds = a != step(net, a);

  const bool unique = verdict.fixed_point.has_value();
  if (fps.size() > 1)
    verdict.violation = "more than one fixed point";
  else if (unique != verdict.synchronous_converges)
    verdict.violation = "unique fixed point does not match synchronous convergence";
  else if (unique != verdict.schedule_converges)
    verdict.violation = "unique fixed point does not match schedule convergence";
  else if (unique && *sync != *verdict.fixed_point)
    verdict.violation = "synchronous limit differs from the fixed point";
  else if (!verdict.stationarity_holds)
    verdict.violation = "no fixed point but f^<n>(0) is stationary";
  verdict.holds = verdict.violation.empty();
  return verdict;
}

ChainVerdict check_chain_characterization(const BooleanNetwork& net) {
  guard(net, max_exhaustive_n);
  const auto arcs = brute_arcs(net);
  for (std::size_t i = 1; i < arcs.size(); ++i)
    if (arcs[i].source == arcs[i - 1].source && arcs[i].target == arcs[i - 1].target)
      throw InvalidSetError("not a regulatory network: an arc carries both signs");
  if (brute_has_positive_cycle(SignedDigraph(net.size(), arcs)))
    throw InvalidSetError("the interaction graph has a positive cycle");

  ChainVerdict verdict;
  verdict.unique_fixed_point = brute_fixed_points(net).size() == 1;
  const auto chain = compute_i_chain(net);
  bool increasing = true;
  for (std::size_t k = 1; k < chain.levels.size(); ++k)
    increasing = increasing && chain.levels[k].size() > chain.levels[k - 1].size();
  verdict.chain_reaches_all = increasing && chain.covers_all();
  verdict.holds = verdict.unique_fixed_point == verdict.chain_reaches_all;
  return verdict;
}

ConvergenceVerdict check_schedule_convergence(const BooleanNetwork& net, std::span<const std::size_t> f,
                                              const Schedule& pi) {
  guard(net, max_exhaustive_n);
  require_no_positive_cycle(net);
  const std::size_t n = net.size();
  const std::vector<std::size_t> order(pi.begin(), pi.end());
  const std::size_t passes = f.size() + 1;

  ConvergenceVerdict verdict;
  const auto fps = brute_fixed_points(net);
  verdict.unique_fixed_point = fps.size() == 1;
  const auto image = constant_image(n, [&](const State& x) {
    State y = x;
    for (std::size_t i = 0; i < passes; ++i)
      y = sweep(net, order, y);
    return y;
  });
  verdict.converges = image && verdict.unique_fixed_point && *image == fps.front();
  verdict.holds = verdict.unique_fixed_point == verdict.converges;
  return verdict;
}

} // namespace bnfix::oracle
