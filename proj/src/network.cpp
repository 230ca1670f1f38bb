#include "bnfix/network.hpp"

#include <unordered_map>

#include "bnfix/error.hpp"

namespace bnfix {

std::vector<Regulator> semantic_regulators(const Expr& f, std::size_t cap) {
  const auto vars = f.variables();
  const std::size_t d = vars.size();
  if (d > cap)
    throw ResourceError("local function depends syntactically on " + std::to_string(d) +
                        " variables, above the in-degree cap of " + std::to_string(cap));

  const std::uint64_t rows = std::uint64_t{1} << d;
  std::vector<std::uint8_t> table(rows);
  std::vector<std::size_t> position(d == 0 ? 0 : vars.back() + 1, 0);
  for (std::size_t j = 0; j < d; ++j)
    position[vars[j]] = j;
  const Expr local = f.remap(position);
  for (std::uint64_t row = 0; row < rows; ++row)
    table[row] = local.eval([row](std::size_t j) { return ((row >> j) & 1U) != 0; });

  std::vector<Regulator> out;
  for (std::size_t j = 0; j < d; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    Regulator r{vars[j], false, false};
    for (std::uint64_t row = 0; row < rows && !(r.positive && r.negative); ++row) {
      if (row & bit)
        continue;
      if (table[row] < table[row | bit])
        r.positive = true;
      else if (table[row] > table[row | bit])
        r.negative = true;
    }
    if (r.positive || r.negative)
      out.push_back(r);
  }
  return out;
}

BooleanNetwork::BooleanNetwork(std::vector<std::string> names, std::vector<Expr> functions,
                               std::size_t indegree_cap)
    : names_(std::move(names)), functions_(std::move(functions)), indegree_cap_(indegree_cap) {
  if (names_.size() != functions_.size())
    throw InvalidSetError("network needs exactly one name per local function");
  if (indegree_cap_ == 0)
    throw InvalidSetError("in-degree cap must be positive");

  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t v = 0; v < names_.size(); ++v) {
    if (names_[v].empty())
      throw InvalidSetError("component " + std::to_string(v) + " has an empty name");
    if (!seen.emplace(names_[v], v).second)
      throw InvalidSetError("duplicate component name '" + names_[v] + "'");
  }

  const std::size_t n = functions_.size();
  supports_.resize(n);
  regulators_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto i : functions_[v].variables())
      if (i >= n)
        throw InvalidSetError("local function of '" + names_[v] + "' references variable " +
                              std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
    regulators_[v] = semantic_regulators(functions_[v], indegree_cap_);
    for (const auto& r : regulators_[v])
      supports_[v].push_back(r.source);
  }
}

std::optional<std::size_t> BooleanNetwork::index_of(const std::string& name) const {
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (names_[v] == name)
      return v;
  return std::nullopt;
}

} // namespace bnfix
