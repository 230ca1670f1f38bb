#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bnfix/network.hpp"

namespace bnfix {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<std::int8_t>(a) == static_cast<std::int8_t>(b) ? Sign::Positive : Sign::Negative;
}

constexpr char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

/// Bit 0: positive, bit 1: negative. Used for parallel opposite-sign arcs
/// and for sets of path signs.
using SignMask = std::uint8_t;
inline constexpr SignMask kPositiveBit = 1;
inline constexpr SignMask kNegativeBit = 2;

constexpr SignMask sign_bit(Sign s) noexcept { return s == Sign::Positive ? kPositiveBit : kNegativeBit; }

/// Multiplies every sign in `mask` by `s`.
constexpr SignMask times(SignMask mask, Sign s) noexcept {
  if (s == Sign::Positive)
    return mask;
  return static_cast<SignMask>(((mask & kPositiveBit) << 1) | ((mask & kNegativeBit) >> 1));
}

/// Every product of a sign in `a` with a sign in `b`.
constexpr SignMask times(SignMask a, SignMask b) noexcept {
  SignMask out = 0;
  if (b & kPositiveBit)
    out |= times(a, Sign::Positive);
  if (b & kNegativeBit)
    out |= times(a, Sign::Negative);
  return out;
}

struct Arc {
  std::size_t source = 0;
  std::size_t target = 0;
  Sign sign = Sign::Positive;

  auto operator<=>(const Arc&) const = default;
};

/// Signed digraph with at most one arc per (source, target, sign); both signs
/// may coexist on one ordered pair, and loops are allowed.
class SignedDigraph {
public:
  SignedDigraph() = default;
  /// Duplicate arcs are merged. Throws InvalidSetError on out-of-range endpoints.
  SignedDigraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t size() const noexcept { return n_; }
  /// Sorted by (source, target, sign).
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const Arc> out_arcs(std::size_t u) const {
    return {arcs_.data() + out_begin_[u], arcs_.data() + out_begin_[u + 1]};
  }
  std::span<const std::size_t> out_neighbors(std::size_t u) const { return out_neighbors_[u]; }
  std::span<const std::size_t> in_neighbors(std::size_t v) const { return in_neighbors_[v]; }

  SignMask signs(std::size_t u, std::size_t v) const { return mask_[u * n_ + v]; }
  bool has_arc(std::size_t u, std::size_t v) const { return signs(u, v) != 0; }
  bool has_arc(std::size_t u, std::size_t v, Sign s) const { return (signs(u, v) & sign_bit(s)) != 0; }

  /// The graph induced by removing every vertex with `removed[v]` set.
  /// Vertex indices are preserved.
  SignedDigraph without_vertices(const std::vector<bool>& removed) const;

  bool operator==(const SignedDigraph& other) const { return n_ == other.n_ && arcs_ == other.arcs_; }

private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_begin_;
  std::vector<std::vector<std::size_t>> out_neighbors_;
  std::vector<std::vector<std::size_t>> in_neighbors_;
  std::vector<SignMask> mask_;
};

/// G(f): (u, v, +) iff raising x_u can raise f_v, (u, v, -) iff it can lower it.
SignedDigraph derive(const BooleanNetwork& net);

struct Degree {
  std::size_t in = 0;
  std::size_t out = 0;
  std::size_t total = 0;

  bool operator==(const Degree&) const = default;
};

/// Neighbour-set cardinalities; a loop counts once as in- and once as out-neighbour.
std::vector<Degree> degrees(const SignedDigraph& g);

/// Marks `vertices` in a length-n mask. Throws InvalidSetError on out-of-range entries.
std::vector<bool> vertex_mask(std::size_t n, std::span<const std::size_t> vertices);

} // namespace bnfix
