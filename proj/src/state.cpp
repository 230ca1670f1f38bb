#include "bnfix/state.hpp"

#include <bit>
#include <stdexcept>

namespace bnfix {

State State::from_bits(std::string_view bits) {
  State s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      s.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("state string may only contain '0' and '1'");
  }
  return s;
}

State State::from_index(std::size_t n, std::uint64_t index) {
  State s(n);
  if (n > 0)
    s.words_[0] = n >= 64 ? index : index & ((std::uint64_t{1} << n) - 1);
  return s;
}

std::size_t State::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::string State::to_string() const {
  std::string out(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if ((*this)[i])
      out[i] = '1';
  return out;
}

std::strong_ordering State::operator<=>(const State& other) const {
  const std::size_t common = n_ < other.n_ ? n_ : other.n_;
  for (std::size_t w = 0; w * 64 < common; ++w) {
    std::uint64_t a = words_[w];
    std::uint64_t b = other.words_[w];
    if (a == b)
      continue;
    // lowest differing bit is the earliest differing component
    const std::uint64_t diff = a ^ b;
    const int bit = std::countr_zero(diff);
    if (w * 64 + static_cast<std::size_t>(bit) >= common)
      break;
    return ((a >> bit) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return n_ <=> other.n_;
}

} // namespace bnfix
