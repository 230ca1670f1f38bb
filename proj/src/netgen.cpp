#include "bnfix/netgen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "bnfix/error.hpp"

namespace bnfix {

namespace {

using Rng = std::mt19937_64;

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random And/Or tree with one leaf per literal.
Expr and_or_tree(std::vector<Expr> lits, Rng& rng) {
  if (lits.size() == 1)
    return std::move(lits.front());
  const std::size_t cut = uniform(rng, 1, lits.size() - 1);
  std::vector<Expr> left(std::make_move_iterator(lits.begin()), std::make_move_iterator(lits.begin() + cut));
  std::vector<Expr> right(std::make_move_iterator(lits.begin() + cut), std::make_move_iterator(lits.end()));
  std::vector<Expr> parts{and_or_tree(std::move(left), rng), and_or_tree(std::move(right), rng)};
  return coin(rng) ? Expr::all_of(std::move(parts)) : Expr::any_of(std::move(parts));
}

Expr literal(std::size_t v, bool positive) { return positive ? Expr::var(v) : Expr::negate(Expr::var(v)); }

// Up to `count` distinct picks from `pool`.
std::vector<std::size_t> sample(const std::vector<std::size_t>& pool, std::size_t count, Rng& rng) {
  std::vector<std::size_t> out;
  std::sample(pool.begin(), pool.end(), std::back_inserter(out), std::min(count, pool.size()), rng);
  return out;
}

} // namespace

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    names.push_back("x" + std::to_string(v + 1));
  return names;
}

GeneratedNetwork generate(const GenSpec& spec) {
  if (spec.tau_plus > spec.tau || 2 * spec.tau > spec.n || spec.max_fanin == 0)
    throw InvalidSetError("infeasible generator parameters: need tau_plus <= tau, 2 * tau <= n and fan-in >= 1");
  Rng rng(spec.seed);
  const std::size_t n = spec.n;
  const std::size_t tau = spec.tau;

  // Logical layout: planted 0..tau-1, then one chain head per planted
  // vertex, then free vertices split between chains, backbone and downstream.
  std::vector<std::vector<std::size_t>> chains(tau);
  for (std::size_t i = 0; i < tau; ++i)
    chains[i].push_back(tau + i);
  std::vector<std::size_t> backbone, downstream;
  for (std::size_t v = 2 * tau; v < n; ++v) {
    if (tau > 0 && coin(rng, 0.25))
      chains[uniform(rng, 0, tau - 1)].push_back(v);
    else if (coin(rng, 0.6))
      backbone.push_back(v);
    else
      downstream.push_back(v);
  }

  std::vector<Expr> fn(n);
  auto wire = [&](std::size_t v, std::vector<Expr> lits) {
    fn[v] = lits.empty() ? Expr::constant(coin(rng)) : and_or_tree(std::move(lits), rng);
  };
  auto backbone_lits = [&](const std::vector<std::size_t>& pool, std::size_t most) {
    std::vector<Expr> lits;
    for (auto u : sample(pool, uniform(rng, 0, most), rng))
      lits.push_back(literal(u, coin(rng)));
    return lits;
  };

  std::vector<std::size_t> earlier;
  for (auto v : backbone) {
    wire(v, backbone_lits(earlier, spec.max_fanin));
    earlier.push_back(v);
  }

  for (std::size_t i = 0; i < tau; ++i) {
    const bool want_positive = i < spec.tau_plus;
    bool sign = true;
    std::size_t prev = i;
    for (auto c : chains[i]) {
      const bool pol = coin(rng);
      sign = sign == pol;
      auto lits = backbone_lits(backbone, spec.max_fanin - 1);
      lits.push_back(literal(prev, pol));
      std::shuffle(lits.begin(), lits.end(), rng);
      wire(c, std::move(lits));
      prev = c;
    }
    const bool closing = sign == want_positive;
    auto lits = backbone_lits(backbone, spec.max_fanin - 1);
    lits.push_back(literal(prev, closing));
    std::shuffle(lits.begin(), lits.end(), rng);
    wire(i, std::move(lits));
  }

  std::vector<std::size_t> upstream(backbone);
  for (std::size_t v = 0; v < 2 * tau; ++v)
    upstream.push_back(v);
  for (const auto& chain : chains)
    upstream.insert(upstream.end(), chain.begin() + 1, chain.end());
  for (auto v : downstream) {
    wire(v, backbone_lits(upstream, spec.max_fanin));
    upstream.push_back(v);
  }

  std::vector<std::size_t> position(n);
  std::iota(position.begin(), position.end(), std::size_t{0});
  std::shuffle(position.begin(), position.end(), rng);
  std::vector<Expr> placed(n);
  for (std::size_t v = 0; v < n; ++v)
    placed[position[v]] = fn[v].remap(position);

  GeneratedNetwork out{BooleanNetwork(default_names(n), std::move(placed)), {}, {}};
  for (std::size_t i = 0; i < tau; ++i) {
    out.fvs.push_back(position[i]);
    if (i < spec.tau_plus)
      out.pfvs.push_back(position[i]);
  }
  std::sort(out.fvs.begin(), out.fvs.end());
  std::sort(out.pfvs.begin(), out.pfvs.end());
  return out;
}

SignedDigraph random_digraph(std::size_t n, double density, double both, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (!coin(rng, density))
        continue;
      if (coin(rng, both)) {
        arcs.push_back({u, v, Sign::Positive});
        arcs.push_back({u, v, Sign::Negative});
      } else {
        arcs.push_back({u, v, coin(rng) ? Sign::Positive : Sign::Negative});
      }
    }
  return SignedDigraph(n, std::move(arcs));
}

BooleanNetwork random_network(std::size_t n, std::size_t max_fanin, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<Expr> fn;
  fn.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto inputs = sample(all, uniform(rng, 0, max_fanin), rng);
    if (inputs.empty()) {
      fn.push_back(Expr::constant(coin(rng)));
      continue;
    }
    std::vector<Expr> lits;
    const std::size_t extra = uniform(rng, 0, 2);
    for (auto u : inputs)
      lits.push_back(literal(u, coin(rng)));
    for (std::size_t i = 0; i < extra; ++i)
      lits.push_back(literal(inputs[uniform(rng, 0, inputs.size() - 1)], coin(rng)));
    std::shuffle(lits.begin(), lits.end(), rng);
    fn.push_back(and_or_tree(std::move(lits), rng));
  }
  return BooleanNetwork(default_names(n), std::move(fn));
}

} // namespace bnfix
