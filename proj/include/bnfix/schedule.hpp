#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bnfix {

/// Sequential update schedule: a permutation of the component indices.
class Schedule {
public:
  Schedule() = default;

  /// Throws InvalidScheduleError unless `order` is a permutation of [0, n).
  explicit Schedule(std::vector<std::size_t> order);

  static Schedule identity(std::size_t n);

  std::size_t size() const noexcept { return order_.size(); }
  std::size_t operator[](std::size_t i) const { return order_[i]; }
  std::span<const std::size_t> order() const noexcept { return order_; }
  auto begin() const noexcept { return order_.begin(); }
  auto end() const noexcept { return order_.end(); }

  bool operator==(const Schedule&) const = default;

private:
  std::vector<std::size_t> order_;
};

} // namespace bnfix
