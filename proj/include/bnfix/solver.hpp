#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bnfix/cycles.hpp"
#include "bnfix/network.hpp"
#include "bnfix/schedule.hpp"
#include "bnfix/state.hpp"

namespace bnfix {

enum class Rejection : std::uint8_t {
  None,
  NotFaFixed,       ///< fa(x) != x
  BoundaryMismatch, ///< f_u(x) != a(u) for some u in P
};

enum class Strategy : std::uint8_t { Basic, Scheduled, Auto };

struct Candidate {
  /// Bit i is the value given to the i-th P vertex (ascending index).
  std::uint64_t assignment = 0;
  State state;
  bool accepted = false;
  Rejection rejection = Rejection::None;
  /// Number of passes (synchronous steps or schedule sweeps) after which
  /// the state stopped changing; 0 if 0 was already stable.
  std::size_t settled_pass = 0;
};

struct FixedPointReport {
  Strategy strategy = Strategy::Scheduled;
  std::vector<std::size_t> pfvs;
  std::vector<std::size_t> fvs;
  Schedule schedule;
  std::vector<State> fixed_points; ///< sorted, lexicographic
  std::uint64_t candidates_tested = 0;
  /// Passes run per candidate: n for the basic algorithm, |F \ P| + 1 otherwise.
  std::size_t iterations_per_candidate = 0;
  /// Filled only with SolverOptions::keep_candidates.
  std::vector<Candidate> candidates;
  double selection_ms = 0.0;
  double elapsed_ms = 0.0;
};

struct SolverOptions {
  /// Check P with is_pfvs before running (exponential; desk scale only).
  bool verify = false;
  bool keep_candidates = false;
  /// Workers for the candidate loop; 0 picks the hardware concurrency.
  unsigned threads = 1;
  /// Refuse more than 2^max_pfvs candidates.
  std::size_t max_pfvs = 30;
  std::size_t cycle_cap = default_cycle_cap;
};

/// For every a: x <- fa^<n>(0), accepted iff fa(x) = x and f_u(x) = a(u) on P.
/// With P empty: x <- f^<n>(0), accepted iff f(x) = x.
FixedPointReport fixed_points_basic(const BooleanNetwork& net, std::span<const std::size_t> p,
                                    const SolverOptions& options = {});

/// For every a: x <- (fa^pi)^<m+1>(0) with m = |F \ P|; same acceptance test.
/// Throws InvalidSetError unless P is inside F and F is an FVS, and
/// InvalidScheduleError unless pi is compatible with F and P.
FixedPointReport fixed_points(const BooleanNetwork& net, std::span<const std::size_t> f,
                              std::span<const std::size_t> p, const Schedule& pi,
                              const SolverOptions& options = {});

enum class OrderMode : std::uint8_t {
  Min,      ///< min_order
  Random,   ///< best of ceil(n/2) seeded shuffles
  File,     ///< definition order
  Explicit, ///< SolveConfig::order
};

struct SolveConfig {
  Strategy strategy = Strategy::Auto;
  /// When set, used as P instead of running the PFVS algorithm.
  std::optional<std::vector<std::size_t>> pfvs;
  /// When set (requires `pfvs`), used as F; otherwise F is completed from P.
  std::optional<std::vector<std::size_t>> fvs;
  OrderMode order_mode = OrderMode::Min;
  std::vector<std::size_t> order;
  std::uint64_t seed = 0;
  SolverOptions options;
};

/// min_order -> pfvs_algorithm -> compatible_order -> fixed_points, with
/// each stage replaceable through the config.
FixedPointReport solve(const BooleanNetwork& net, const SolveConfig& config = {});

const char* to_string(Strategy s) noexcept;
const char* to_string(Rejection r) noexcept;

} // namespace bnfix
