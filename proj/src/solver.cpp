#include "bnfix/solver.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "bnfix/dynamics.hpp"
#include "bnfix/error.hpp"
#include "bnfix/pfvs.hpp"
#include "bnfix/signed_digraph.hpp"

namespace bnfix {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::size_t> sorted_unique(std::span<const std::size_t> vs) {
  std::vector<std::size_t> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Runs every candidate through `settle` (which drives x from 0 to the
// candidate state and returns its settled pass) and applies the acceptance test.
template <class Settle>
void run_candidates(const BooleanNetwork& net, std::span<const std::size_t> p,
                    const SolverOptions& options, Settle settle, FixedPointReport& report) {
  const std::size_t k = p.size();
  if (k > options.max_pfvs || k >= 63)
    throw ResourceError("PFVS of size " + std::to_string(k) + " exceeds the candidate guard of " +
                        std::to_string(options.max_pfvs));
  const std::uint64_t total = std::uint64_t{1} << k;
  unsigned workers = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  struct Chunk {
    std::vector<Candidate> kept;
    std::vector<State> accepted;
  };
  std::vector<Chunk> chunks(workers);

  auto work = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    ClampedDynamics dyn(net);
    State x(net.size());
    Chunk& chunk = chunks[w];
    for (std::uint64_t a = begin; a < end; ++a) {
      for (std::size_t i = 0; i < k; ++i)
        dyn.clamp(p[i], ((a >> i) & 1U) != 0);
      x.clear();
      Candidate c;
      c.assignment = a;
      c.settled_pass = settle(dyn, x);
      if (!dyn.is_fixed(x)) {
        c.rejection = Rejection::NotFaFixed;
      } else {
        for (std::size_t i = 0; i < k; ++i)
          if (net.eval(p[i], x) != (((a >> i) & 1U) != 0)) {
            c.rejection = Rejection::BoundaryMismatch;
            break;
          }
      }
      c.accepted = c.rejection == Rejection::None;
      if (c.accepted)
        chunk.accepted.push_back(x);
      if (options.keep_candidates) {
        c.state = x;
        chunk.kept.push_back(std::move(c));
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
  }

  for (auto& chunk : chunks) {
    report.fixed_points.insert(report.fixed_points.end(), chunk.accepted.begin(), chunk.accepted.end());
    for (auto& c : chunk.kept)
      report.candidates.push_back(std::move(c));
  }
  std::sort(report.fixed_points.begin(), report.fixed_points.end());
  report.candidates_tested = total;
}

} // namespace

FixedPointReport fixed_points_basic(const BooleanNetwork& net, std::span<const std::size_t> p,
                                    const SolverOptions& options) {
  const auto start = Clock::now();
  FixedPointReport report;
  report.strategy = Strategy::Basic;
  report.pfvs = sorted_unique(p);
  vertex_mask(net.size(), report.pfvs);
  if (options.verify && !is_pfvs(derive(net), report.pfvs, options.cycle_cap))
    throw InvalidSetError("P is not a positive feedback vertex set");

  const std::size_t n = net.size();
  report.iterations_per_candidate = n;
  auto settle = [n](const ClampedDynamics& dyn, State& x) {
    State next(x.size());
    std::size_t settled = 0;
    for (std::size_t i = 0; i < n; ++i) {
      dyn.step(x, next);
      if (next != x)
        settled = i + 1;
      std::swap(x, next);
    }
    return settled;
  };
  run_candidates(net, report.pfvs, options, settle, report);
  report.elapsed_ms = ms_since(start);
  return report;
}

FixedPointReport fixed_points(const BooleanNetwork& net, std::span<const std::size_t> f,
                              std::span<const std::size_t> p, const Schedule& pi,
                              const SolverOptions& options) {
  const auto start = Clock::now();
  FixedPointReport report;
  report.strategy = Strategy::Scheduled;
  report.pfvs = sorted_unique(p);
  report.fvs = sorted_unique(f);
  report.schedule = pi;

  const auto g = derive(net);
  if (pi.size() != net.size())
    throw InvalidScheduleError("schedule length does not match the network");
  if (!std::includes(report.fvs.begin(), report.fvs.end(), report.pfvs.begin(), report.pfvs.end()))
    throw InvalidSetError("P must be contained in F");
  if (!is_fvs(g, report.fvs))
    throw InvalidSetError("F is not a feedback vertex set");
  if (options.verify && !is_pfvs(g, report.pfvs, options.cycle_cap))
    throw InvalidSetError("P is not a positive feedback vertex set");
  if (!is_compatible(g, report.fvs, report.pfvs, pi))
    throw InvalidScheduleError("schedule is not compatible with F and P");

  const std::size_t passes = report.fvs.size() - report.pfvs.size() + 1;
  report.iterations_per_candidate = passes;
  auto settle = [&pi, passes](const ClampedDynamics& dyn, State& x) {
    std::size_t settled = 0;
    for (std::size_t i = 0; i < passes; ++i)
      if (dyn.sweep(pi, x))
        settled = i + 1;
    return settled;
  };
  run_candidates(net, report.pfvs, options, settle, report);
  report.elapsed_ms = ms_since(start);
  return report;
}

FixedPointReport solve(const BooleanNetwork& net, const SolveConfig& config) {
  const auto start = Clock::now();
  const auto g = derive(net);
  const std::size_t n = net.size();

  std::vector<std::size_t> p;
  std::vector<std::size_t> f;
  if (config.pfvs) {
    p = sorted_unique(*config.pfvs);
    f = config.fvs ? sorted_unique(*config.fvs) : complete_fvs(g, p);
  } else {
    if (config.fvs)
      throw InvalidSetError("an explicit F requires an explicit P");
    PfvsOutput out;
    switch (config.order_mode) {
    case OrderMode::Min:
      out = pfvs_algorithm(g, min_order(g));
      break;
    case OrderMode::Random:
      out = pfvs_best_of_random(g, std::max<std::size_t>(1, (n + 1) / 2), config.seed);
      break;
    case OrderMode::File: {
      std::vector<std::size_t> identity(n);
      for (std::size_t v = 0; v < n; ++v)
        identity[v] = v;
      out = pfvs_algorithm(g, identity);
      break;
    }
    case OrderMode::Explicit:
      out = pfvs_algorithm(g, config.order);
      break;
    }
    p = std::move(out.pfvs);
    f = std::move(out.fvs);
  }
  const double selection_ms = ms_since(start);

  FixedPointReport report;
  if (config.strategy == Strategy::Basic) {
    report = fixed_points_basic(net, p, config.options);
    report.fvs = f;
  } else {
    report = fixed_points(net, f, p, compatible_order(g, f, p), config.options);
  }
  report.selection_ms = selection_ms;
  report.elapsed_ms = ms_since(start);
  return report;
}

const char* to_string(Strategy s) noexcept {
  switch (s) {
  case Strategy::Basic:
    return "basic";
  case Strategy::Scheduled:
    return "scheduled";
  case Strategy::Auto:
    return "auto";
  }
  return "?";
}

const char* to_string(Rejection r) noexcept {
  switch (r) {
  case Rejection::None:
    return "none";
  case Rejection::NotFaFixed:
    return "not-fa-fixed";
  case Rejection::BoundaryMismatch:
    return "boundary-mismatch";
  }
  return "?";
}

} // namespace bnfix
