#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bnfix {

/// Dense bit vector over component indices. Ordering is lexicographic over
/// the bit string in component order (component 0 is the most significant).
class State {
public:
  State() = default;
  explicit State(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  /// Parses a string of '0'/'1' characters, component 0 first.
  static State from_bits(std::string_view bits);

  /// Bit i of the state is bit i of `index`. Used to sweep {0,1}^n for n <= 64.
  static State from_index(std::size_t n, std::uint64_t index);

  std::size_t size() const noexcept { return n_; }

  bool operator[](std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void clear() noexcept {
    for (auto& w : words_)
      w = 0;
  }

  std::size_t count() const noexcept;

  std::string to_string() const;

  bool operator==(const State& other) const = default;
  std::strong_ordering operator<=>(const State& other) const;

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace bnfix
