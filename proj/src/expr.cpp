#include "bnfix/expr.hpp"

#include <algorithm>

namespace bnfix {

Expr Expr::constant(bool value) {
  Expr e;
  e.kind_ = Kind::Const;
  e.payload_ = value ? 1 : 0;
  return e;
}

Expr Expr::var(std::size_t index) {
  Expr e;
  e.kind_ = Kind::Var;
  e.payload_ = index;
  return e;
}

Expr Expr::negate(Expr child) {
  Expr e;
  e.kind_ = Kind::Not;
  e.children_.push_back(std::move(child));
  return e;
}

Expr Expr::all_of(std::vector<Expr> children) {
  if (children.empty())
    return constant(true);
  if (children.size() == 1)
    return std::move(children.front());
  Expr e;
  e.kind_ = Kind::And;
  e.children_ = std::move(children);
  return e;
}

Expr Expr::any_of(std::vector<Expr> children) {
  if (children.empty())
    return constant(false);
  if (children.size() == 1)
    return std::move(children.front());
  Expr e;
  e.kind_ = Kind::Or;
  e.children_ = std::move(children);
  return e;
}

void Expr::collect(std::vector<std::size_t>& out) const {
  if (kind_ == Kind::Var)
    out.push_back(payload_);
  for (const auto& c : children_)
    c.collect(out);
}

std::vector<std::size_t> Expr::variables() const {
  std::vector<std::size_t> out;
  collect(out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Expr Expr::substitute(const std::function<std::optional<bool>(std::size_t)>& fixed) const {
  switch (kind_) {
  case Kind::Const:
    return *this;
  case Kind::Var:
    if (auto v = fixed(payload_))
      return constant(*v);
    return *this;
  case Kind::Not: {
    Expr c = children_.front().substitute(fixed);
    if (c.is_constant())
      return constant(!c.value());
    return negate(std::move(c));
  }
  case Kind::And:
  case Kind::Or: {
    const bool absorbing = kind_ == Kind::Or;
    std::vector<Expr> kept;
    for (const auto& child : children_) {
      Expr c = child.substitute(fixed);
      if (c.is_constant()) {
        if (c.value() == absorbing)
          return constant(absorbing);
        continue;
      }
      kept.push_back(std::move(c));
    }
    return kind_ == Kind::And ? all_of(std::move(kept)) : any_of(std::move(kept));
  }
  }
  return *this;
}

Expr Expr::folded() const {
  return substitute([](std::size_t) { return std::optional<bool>{}; });
}

Expr Expr::remap(std::span<const std::size_t> mapping) const {
  Expr e = *this;
  if (kind_ == Kind::Var)
    e.payload_ = mapping[payload_];
  for (auto& c : e.children_)
    c = c.remap(mapping);
  return e;
}

namespace {

void render(const Expr& e, std::span<const std::string> names, std::string& out) {
  switch (e.kind()) {
  case Expr::Kind::Const:
    out += e.value() ? '1' : '0';
    return;
  case Expr::Kind::Var:
    out += names[e.index()];
    return;
  case Expr::Kind::Not: {
    const auto& c = e.children().front();
    out += '!';
    const bool atom = c.kind() == Expr::Kind::Const || c.kind() == Expr::Kind::Var ||
                      c.kind() == Expr::Kind::Not;
    if (!atom)
      out += '(';
    render(c, names, out);
    if (!atom)
      out += ')';
    return;
  }
  case Expr::Kind::And:
  case Expr::Kind::Or: {
    const bool is_and = e.kind() == Expr::Kind::And;
    bool first = true;
    for (const auto& c : e.children()) {
      if (!first)
        out += is_and ? " & " : " | ";
      first = false;
      // same-kind children need parentheses too, or they would be
      // re-parsed as a flat node of the parent's arity
      const bool paren = c.kind() == Expr::Kind::Or || c.kind() == e.kind();
      if (paren)
        out += '(';
      render(c, names, out);
      if (paren)
        out += ')';
    }
    return;
  }
  }
}

} // namespace

std::string to_string(const Expr& e, std::span<const std::string> names) {
  std::string out;
  render(e, names, out);
  return out;
}

} // namespace bnfix
