#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "bnfix/network.hpp"
#include "bnfix/schedule.hpp"
#include "bnfix/state.hpp"

namespace bnfix {

/// Partial assignment of components to constants (the `a` of a clamped network).
using Assignment = std::map<std::size_t, bool>;

bool eval_local(const BooleanNetwork& net, std::size_t v, const State& x);

/// Synchronous image f(x).
State apply(const BooleanNetwork& net, const State& x);

/// x with coordinate u replaced by f_u(x).
State apply_partial(const BooleanNetwork& net, std::size_t u, const State& x);

/// Partial evaluations composed in schedule order: pi[0] first.
State apply_schedule(const BooleanNetwork& net, const Schedule& pi, const State& x);

/// k-fold self-composition of the synchronous map; k = 0 is the identity.
State iterate(const BooleanNetwork& net, std::size_t k, const State& x);

bool is_fixed_point(const BooleanNetwork& net, const State& x);

/// The network whose components in `a` are replaced by the constants a(v).
BooleanNetwork restrict(const BooleanNetwork& net, const Assignment& a);

/// In-place evaluation of a network with some components clamped to
/// constants, without materialising the restricted network. Used by the
/// solver's candidate loop; each worker owns one instance.
class ClampedDynamics {
public:
  explicit ClampedDynamics(const BooleanNetwork& net);

  void clamp(std::size_t v, bool value) { clamp_[v] = value ? 1 : 0; }
  void release(std::size_t v) { clamp_[v] = -1; }
  void release_all();

  bool eval(std::size_t v, const State& x) const {
    return clamp_[v] >= 0 ? clamp_[v] != 0 : net_->eval(v, x);
  }

  /// out <- fa(x). `out` must not alias `x`.
  void step(const State& x, State& out) const;

  /// x <- fa^pi(x), in place. Returns whether any coordinate changed.
  bool sweep(const Schedule& pi, State& x) const;

  /// fa(x) == x.
  bool is_fixed(const State& x) const;

private:
  const BooleanNetwork* net_;
  std::vector<std::int8_t> clamp_;
};

} // namespace bnfix
