#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bnfix/network.hpp"

namespace bnfix {

/// The chain I_1 ⊊ I_2 ⊊ ... ⊊ I_k* of components whose local functions
/// become constant once the previously fixed components are frozen.
struct IChain {
  /// levels[k-1] is I_k, sorted ascending. Stops at the first k with
  /// I_k = I_{k+1}; empty when no local function is constant.
  std::vector<std::vector<std::size_t>> levels;
  /// constants[v] is c_v for every v in the last level, nullopt elsewhere.
  std::vector<std::optional<bool>> constants;

  /// k*, the level at which the chain becomes stationary (0 if I_1 is empty).
  std::size_t irreducibility_index() const noexcept { return levels.size(); }

  /// 1-based level at which v is first fixed.
  std::optional<std::size_t> level_of(std::size_t v) const;

  bool covers_all() const noexcept {
    return !levels.empty() && levels.back().size() == constants.size();
  }
};

/// Throws ResourceError when a component's free support exceeds the
/// network's in-degree cap.
IChain compute_i_chain(const BooleanNetwork& net);

/// f^{I_k}: components in I_k become Const(c_v); elsewhere every variable
/// in I_k is replaced by its constant and the tree is constant-folded.
/// k = 0 returns the network unchanged.
BooleanNetwork reduce_by_chain(const BooleanNetwork& net, const IChain& chain, std::size_t k);

} // namespace bnfix
