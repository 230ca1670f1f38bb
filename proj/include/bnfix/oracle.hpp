#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bnfix/network.hpp"
#include "bnfix/schedule.hpp"
#include "bnfix/signed_digraph.hpp"
#include "bnfix/state.hpp"

namespace bnfix::oracle {

inline constexpr std::size_t max_fixed_point_n = 25;
inline constexpr std::size_t max_exhaustive_n = 12;

/// {x : f(x) = x} by sweeping all 2^n states, sorted. Throws ResourceError
/// above max_fixed_point_n.
std::vector<State> brute_fixed_points(const BooleanNetwork& net);

/// Signed arcs by flipping every coordinate of every state in {0,1}^n.
std::vector<Arc> brute_arcs(const BooleanNetwork& net);

/// I_k levels straight from the definition, constancy checked over the full
/// state space restricted to the previously fixed values.
struct BruteChain {
  std::vector<std::vector<std::size_t>> levels;
  std::vector<std::optional<bool>> constants;
};
BruteChain brute_i_chain(const BooleanNetwork& net);

/// Depth-first search over simple paths.
bool brute_has_positive_cycle(const SignedDigraph& g);

struct UniquenessVerdict {
  std::optional<State> fixed_point;            ///< set iff exactly one fixed point
  std::size_t fixed_point_count = 0;
  bool synchronous_converges = false;          ///< f^<n> is constant
  bool schedule_converges = false;             ///< some f^pi is constant
  std::optional<Schedule> witness;             ///< the pi found, if any
  bool stationarity_holds = true;                 ///< no fixed point => f^<n>(0) != f^<n+1>(0)
  bool holds = false;                          ///< all equivalences and bounds hold
  std::string violation;
};

/// Requires no positive cycle and n <= max_exhaustive_n (InvalidSetError /
/// ResourceError otherwise).
UniquenessVerdict check_uniqueness(const BooleanNetwork& net);

struct ChainVerdict {
  bool unique_fixed_point = false;
  bool chain_reaches_all = false; ///< strictly increasing chain ending at [n]
  bool holds = false;
};

/// Requires no positive cycle and no arc carrying both signs.
ChainVerdict check_chain_characterization(const BooleanNetwork& net);

struct ConvergenceVerdict {
  bool unique_fixed_point = false;
  bool converges = false; ///< (f^pi)^<|F|+1> is constant and equals that fixed point
  bool holds = false;
};

/// Unique fixed point y <=> (f^pi)^<|F|+1>(x) = y for all x, exhaustively.
/// Requires no positive cycle and n <= max_exhaustive_n.
ConvergenceVerdict check_schedule_convergence(const BooleanNetwork& net, std::span<const std::size_t> f,
                                              const Schedule& pi);

} // namespace bnfix::oracle
