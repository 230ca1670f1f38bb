#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bnfix/state.hpp"

namespace bnfix {

/// Local activation function as an expression tree over component indices.
/// And/Or nodes always carry at least two children; the factories collapse
/// smaller argument lists.
class Expr {
public:
  enum class Kind : std::uint8_t { Const, Var, Not, And, Or };

  Expr() = default;

  static Expr constant(bool value);
  static Expr var(std::size_t index);
  static Expr negate(Expr child);
  static Expr all_of(std::vector<Expr> children);
  static Expr any_of(std::vector<Expr> children);

  Kind kind() const noexcept { return kind_; }
  bool is_constant() const noexcept { return kind_ == Kind::Const; }
  bool value() const noexcept { return payload_ != 0; }
  std::size_t index() const noexcept { return payload_; }
  const std::vector<Expr>& children() const noexcept { return children_; }

  /// `lookup(i)` returns the value of variable i.
  template <typename Lookup>
  bool eval(const Lookup& lookup) const {
    switch (kind_) {
    case Kind::Const:
      return payload_ != 0;
    case Kind::Var:
      return lookup(payload_);
    case Kind::Not:
      return !children_.front().eval(lookup);
    case Kind::And:
      for (const auto& c : children_)
        if (!c.eval(lookup))
          return false;
      return true;
    case Kind::Or:
      for (const auto& c : children_)
        if (c.eval(lookup))
          return true;
      return false;
    }
    return false;
  }

  bool eval(const State& x) const {
    return eval([&x](std::size_t i) { return x[i]; });
  }

  /// Sorted, duplicate-free list of variable indices occurring in the tree.
  std::vector<std::size_t> variables() const;

  /// Replaces every variable for which `fixed` returns a value by that
  /// constant, then folds constants bottom-up.
  Expr substitute(const std::function<std::optional<bool>(std::size_t)>& fixed) const;

  /// Constant folding only: no absorption, no idempotence, no De Morgan.
  Expr folded() const;

  /// Renames variable i to mapping[i].
  Expr remap(std::span<const std::size_t> mapping) const;

  bool operator==(const Expr& other) const = default;

private:
  Kind kind_ = Kind::Const;
  std::size_t payload_ = 0;
  std::vector<Expr> children_;

  void collect(std::vector<std::size_t>& out) const;
};

/// Renders with the network file grammar (`!`, `&`, `|`, parentheses only
/// where precedence requires them).
std::string to_string(const Expr& e, std::span<const std::string> names);

} // namespace bnfix
