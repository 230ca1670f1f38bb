#include "bnfix/ichain.hpp"

#include <algorithm>

#include "bnfix/error.hpp"

namespace bnfix {

std::optional<std::size_t> IChain::level_of(std::size_t v) const {
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (auto u : levels[k])
      if (u == v)
        return k + 1;
  return std::nullopt;
}

namespace {

// Constant value of f_v when the variables with a known constant are frozen,
// or nullopt if some assignment of the remaining support changes the output.
std::optional<bool> frozen_constant(const BooleanNetwork& net, std::size_t v,
                                    const std::vector<std::optional<bool>>& frozen) {
  std::vector<std::size_t> free_vars;
  for (auto u : net.support(v))
    if (!frozen[u])
      free_vars.push_back(u);
  if (free_vars.size() > net.indegree_cap())
    throw ResourceError("free support of '" + net.name(v) + "' exceeds the in-degree cap");

  std::vector<std::int8_t> value(net.size(), 0);
  for (std::size_t u = 0; u < net.size(); ++u)
    if (frozen[u])
      value[u] = *frozen[u] ? 1 : 0;

  const auto lookup = [&value](std::size_t i) { return value[i] != 0; };
  const std::uint64_t rows = std::uint64_t{1} << free_vars.size();
  std::optional<bool> first;
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::size_t j = 0; j < free_vars.size(); ++j)
      value[free_vars[j]] = static_cast<std::int8_t>((row >> j) & 1U);
    const bool out = net.function(v).eval(lookup);
    if (!first)
      first = out;
    else if (*first != out)
      return std::nullopt;
  }
  return first;
}

} // namespace

IChain compute_i_chain(const BooleanNetwork& net) {
  const std::size_t n = net.size();
  IChain chain;
  chain.constants.assign(n, std::nullopt);

  std::vector<std::size_t> current;
  while (true) {
    // Constancy is decided against the previous level only, so values found
    // in this round are staged and published together.
    std::vector<std::pair<std::size_t, bool>> found;
    for (std::size_t v = 0; v < n; ++v) {
      if (chain.constants[v])
        continue;
      if (auto c = frozen_constant(net, v, chain.constants))
        found.emplace_back(v, *c);
    }
    if (found.empty())
      break;
    for (const auto& [v, c] : found) {
      chain.constants[v] = c;
      current.push_back(v);
    }
    std::sort(current.begin(), current.end());
    chain.levels.push_back(current);
  }
  return chain;
}

BooleanNetwork reduce_by_chain(const BooleanNetwork& net, const IChain& chain, std::size_t k) {
  if (k > chain.levels.size())
    throw InvalidSetError("chain has only " + std::to_string(chain.levels.size()) + " levels");
  if (k == 0)
    return net;

  std::vector<std::optional<bool>> fixed(net.size());
  for (auto v : chain.levels[k - 1])
    fixed[v] = chain.constants[v];

  std::vector<std::string> names(net.names().begin(), net.names().end());
  std::vector<Expr> functions;
  functions.reserve(net.size());
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (fixed[v])
      functions.push_back(Expr::constant(*fixed[v]));
    else
      functions.push_back(net.function(v).substitute([&fixed](std::size_t u) { return fixed[u]; }));
  }
  return BooleanNetwork(std::move(names), std::move(functions), net.indegree_cap());
}

} // namespace bnfix
