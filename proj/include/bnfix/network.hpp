#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bnfix/expr.hpp"

namespace bnfix {

/// One semantic regulator of a component: flipping `source` can raise the
/// target (`positive`) and/or lower it (`negative`).
struct Regulator {
  std::size_t source = 0;
  bool positive = false;
  bool negative = false;

  bool operator==(const Regulator&) const = default;
};

/// Immutable Boolean network. Supports and regulator signs are semantic:
/// they are computed on construction by sweeping all assignments of each
/// component's syntactic support, so `x & !x` contributes no regulator.
class BooleanNetwork {
public:
  static constexpr std::size_t default_indegree_cap = 20;

  BooleanNetwork() = default;

  /// Throws InvalidSetError on duplicate names or out-of-range variables and
  /// ResourceError when a syntactic support exceeds `indegree_cap`.
  BooleanNetwork(std::vector<std::string> names, std::vector<Expr> functions,
                 std::size_t indegree_cap = default_indegree_cap);

  std::size_t size() const noexcept { return functions_.size(); }
  const std::string& name(std::size_t v) const { return names_[v]; }
  std::span<const std::string> names() const noexcept { return names_; }
  const Expr& function(std::size_t v) const { return functions_[v]; }
  std::span<const Expr> functions() const noexcept { return functions_; }
  std::span<const std::size_t> support(std::size_t v) const { return supports_[v]; }
  std::span<const Regulator> regulators(std::size_t v) const { return regulators_[v]; }
  std::size_t indegree_cap() const noexcept { return indegree_cap_; }

  std::optional<std::size_t> index_of(const std::string& name) const;

  bool eval(std::size_t v, const State& x) const { return functions_[v].eval(x); }

private:
  std::vector<std::string> names_;
  std::vector<Expr> functions_;
  std::vector<std::vector<std::size_t>> supports_;
  std::vector<std::vector<Regulator>> regulators_;
  std::size_t indegree_cap_ = default_indegree_cap;
};

/// Regulators of `f` over its syntactic support, by exhaustive flip test.
/// Throws ResourceError if the syntactic support exceeds `cap`.
std::vector<Regulator> semantic_regulators(const Expr& f, std::size_t cap);

} // namespace bnfix
