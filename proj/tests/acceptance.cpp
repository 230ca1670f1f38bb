// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "bnfix/cycles.hpp"
#include "bnfix/dynamics.hpp"
#include "bnfix/error.hpp"
#include "bnfix/ichain.hpp"
#include "bnfix/netgen.hpp"
#include "bnfix/oracle.hpp"
#include "bnfix/pfvs.hpp"
#include "bnfix/solver.hpp"
#include "support.hpp"

using namespace bnfix;
using namespace bnfix::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string join(const std::vector<std::size_t>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? "," : "") + std::to_string(vs[i] + 1);
  return s + "}";
}

// Scheduled solver on the 8-component network with F = {3,4,7}, P = {3}.
Outcome scheduled_trace() {
  const auto start = Clock::now();
  const auto net = fixture("net8");
  SolverOptions opts;
  opts.keep_candidates = true;
  const auto report = fixed_points(net, zero_based({3, 4, 7}), zero_based({3}),
                                   Schedule(zero_based({3, 1, 2, 5, 6, 8, 4, 7})), opts);
  const double secs = seconds_since(start);

  Outcome out;
  const auto& c0 = report.candidates.at(0);
  const auto& c1 = report.candidates.at(1);
  out.pass = report.fixed_points == std::vector<State>{State::from_bits("10010000")} &&
             report.iterations_per_candidate == 3 && c0.accepted && c0.settled_pass <= 3 &&
             c0.state == State::from_bits("10010000") && !c1.accepted &&
             c1.rejection == Rejection::NotFaFixed && secs < 1.0;
  std::ostringstream d;
  d << "fixed points=" << report.fixed_points.size() << " a=0 settled after " << c0.settled_pass
    << " of " << report.iterations_per_candidate << " passes, a=1 " << to_string(c1.rejection) << ", "
    << secs * 1000 << " ms";
  out.detail = d.str();
  return out;
}

Outcome pfvs_trace() {
  const auto g = derive(fixture("net8"));
  const auto out = pfvs_algorithm(g, zero_based({3, 7, 2, 5, 1, 4, 8, 6}));
  Outcome o;
  o.pass = out.pfvs == zero_based({6, 8}) && out.o == zero_based({1, 4}) &&
           out.fvs == zero_based({1, 4, 6, 8}) && out.phases == 2;
  o.detail = "P=" + join(out.pfvs) + " O=" + join(out.o) + " F=" + join(out.fvs) +
             " phases=" + std::to_string(out.phases);
  return o;
}

Outcome fixing_chain() {
  const auto net = fixture("chain7");
  const auto chain = compute_i_chain(net);
  const std::vector<std::vector<std::size_t>> levels{zero_based({4, 5}), zero_based({1, 4, 5}),
                                                     zero_based({1, 4, 5, 6, 7})};
  const std::vector<std::optional<bool>> constants{true, std::nullopt, std::nullopt, true, false, true, true};
  const auto reduced = reduce_by_chain(net, chain, 3);
  const std::vector<std::string> expected{"1", "!x2 & x3", "!x3", "1", "0", "1", "1"};
  bool same = true;
  for (std::size_t v = 0; v < 7; ++v)
    same = same && to_string(reduced.function(v), reduced.names()) == expected[v];
  Outcome o;
  o.pass = chain.levels == levels && chain.constants == constants && chain.irreducibility_index() == 3 && same;
  o.detail = "k*=" + std::to_string(chain.irreducibility_index()) + ", reduced network " +
             (same ? "matches" : "differs");
  return o;
}

Outcome interaction_graph() {
  const auto g = derive(fixture("loops5"));
  const auto expected = loops5_arcs();
  const auto cycles = enumerate_cycles(g);
  const Sign P = Sign::Positive, N = Sign::Negative;
  auto sign_of = [&](std::vector<std::size_t> vs, std::vector<Sign> ss) {
    for (const auto& c : cycles)
      if (c.vertices == vs && c.arc_signs == ss)
        return std::optional<Sign>(c.sign);
    return std::optional<Sign>();
  };
  const auto c1 = sign_of({3, 4}, {P, P});
  const auto c2 = sign_of({0, 2, 1}, {N, P, N});
  const auto c3 = sign_of({0, 2, 1}, {N, N, N});
  const auto c4 = sign_of({0, 1}, {P, N});
  Outcome o;
  const bool arcs_ok = std::vector<Arc>(g.arcs().begin(), g.arcs().end()) == expected;
  const bool pfvs_ok = is_pfvs(g, zero_based({3, 4}));
  o.pass = arcs_ok && c1 == P && c2 == P && c3 == N && c4 == N && pfvs_ok;
  o.detail = std::to_string(g.arcs().size()) + " arcs " + (arcs_ok ? "as drawn" : "differ") + ", " +
             std::to_string(cycles.size()) + " signed cycles, {3,4} " + (pfvs_ok ? "is" : "is not") +
             " a PFVS";
  return o;
}

Outcome one_pass_schedules() {
  const auto a = fixture("negcycle3a");
  const auto b = fixture("negcycle3b");
  const Schedule pi(zero_based({1, 2, 3}));
  const Schedule pi2(zero_based({1, 3, 2}));
  const State y = State::from_bits("101");
  const State y2 = State::from_bits("111");
  bool first = true, second = true;
  for (std::uint64_t i = 0; i < 8; ++i) {
    first = first && apply_schedule(a, pi, State::from_index(3, i)) == y;
    second = second && apply_schedule(b, pi2, State::from_index(3, i)) == y2;
  }
  const State from110 = apply_schedule(b, pi, State::from_bits("110"));
  Outcome o;
  o.pass = first && second && from110 == y && from110 != y2 && is_fixed_point(b, y2);
  o.detail = std::string("first variant ") + (first ? "converges" : "fails") + ", (1,2,3) maps 110 to " +
             from110.to_string() + ", (1,3,2) " + (second ? "converges" : "fails");
  return o;
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  std::size_t mismatches = 0, bound_violations = 0, instances = 0, total_fps = 0;
  std::string first_bad;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    std::mt19937_64 rng(seed);
    GenSpec spec;
    spec.n = std::uniform_int_distribution<std::size_t>(6, 14)(rng);
    spec.tau = std::uniform_int_distribution<std::size_t>(0, spec.n / 2)(rng);
    spec.tau_plus = std::uniform_int_distribution<std::size_t>(0, spec.tau)(rng);
    spec.max_fanin = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    spec.seed = seed;
    const auto gen = generate(spec);
    const auto truth = oracle::brute_fixed_points(gen.net);
    SolveConfig basic;
    basic.strategy = Strategy::Basic;
    const auto r1 = solve(gen.net, basic);
    const auto r2 = solve(gen.net, SolveConfig{});
    const auto tau_plus = brute_tau_plus(derive(gen.net)).size;
    ++instances;
    total_fps += truth.size();
    if (r1.fixed_points != truth || r2.fixed_points != truth) {
      ++mismatches;
      if (first_bad.empty())
        first_bad = " first mismatch at seed " + std::to_string(seed);
    }
    if (truth.size() > (std::size_t{1} << tau_plus))
      ++bound_violations;
  }
  const double secs = seconds_since(start);
  Outcome o;
  o.pass = mismatches == 0 && bound_violations == 0 && secs < 300.0;
  std::ostringstream d;
  d << instances << " networks, " << total_fps << " fixed points, " << mismatches << " mismatches, "
    << bound_violations << " bound violations, " << secs << " s" << first_bad;
  o.detail = d.str();
  return o;
}

// Alternates planted-negative-cycle networks with unconstrained random
// networks that happen to have no positive cycle.
BooleanNetwork no_positive_cycle_network(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (seed % 2 == 0) {
    GenSpec spec;
    spec.n = std::uniform_int_distribution<std::size_t>(3, 12)(rng);
    spec.tau = std::uniform_int_distribution<std::size_t>(0, spec.n / 2)(rng);
    spec.tau_plus = 0;
    spec.max_fanin = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    spec.seed = seed;
    return generate(spec).net;
  }
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 10)(rng);
    auto net = random_network(n, 3, seed * 7919 + attempt);
    if (!oracle::brute_has_positive_cycle(SignedDigraph(n, oracle::brute_arcs(net))))
      return net;
  }
}

Outcome no_positive_cycle_suite() {
  std::size_t instances = 0, violations = 0, with_fp = 0, orders = 0;
  std::string first_bad;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto net = no_positive_cycle_network(seed);
    const auto verdict = oracle::check_uniqueness(net);
    ++instances;
    bool ok = verdict.holds && verdict.fixed_point_count <= 1;
    if (verdict.fixed_point)
      ++with_fp;

    const auto g = derive(net);
    const auto f = complete_fvs(g, {});
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 5; ++k) {
      const auto pi = random_compatible_order(g, f, {}, rng);
      ++orders;
      ok = ok && is_compatible(g, f, {}, pi) && oracle::check_schedule_convergence(net, f, pi).holds;
    }
    if (!ok) {
      ++violations;
      if (first_bad.empty())
        first_bad = ", first at seed " + std::to_string(seed) + (verdict.violation.empty() ? "" : ": " + verdict.violation);
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(instances) + " networks (" + std::to_string(with_fp) + " with a fixed point), " +
             std::to_string(orders) + " compatible orders, " + std::to_string(violations) + " violations" +
             first_bad;
  return o;
}

Outcome pfvs_validity() {
  std::size_t graphs = 0, runs = 0, not_pfvs = 0, not_minimal = 0;
  std::string first_bad;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 16)(rng);
    const double density = std::uniform_real_distribution<double>(0.05, 0.3)(rng);
    const auto g = random_digraph(n, density, 0.1, seed);
    ++graphs;
    std::vector<std::vector<std::size_t>> orders{min_order(g)};
    for (int k = 0; k < 10; ++k)
      orders.push_back(random_order(n, rng));
    for (std::size_t k = 0; k < orders.size(); ++k) {
      const auto out = pfvs_algorithm(g, orders[k]);
      ++runs;
      const bool p_ok = is_pfvs(g, out.pfvs);
      const bool f_ok = is_minimal_fvs(g, out.fvs);
      not_pfvs += !p_ok;
      not_minimal += !f_ok;
      if ((!p_ok || !f_ok) && first_bad.empty())
        first_bad = ", first at seed " + std::to_string(seed) + " order " + std::to_string(k) +
                    (p_ok ? "" : " (P)") + (f_ok ? "" : " (F not minimal)");
    }
  }
  Outcome o;
  o.pass = not_pfvs == 0 && not_minimal == 0;
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(runs) + " runs, " + std::to_string(not_pfvs) +
             " P not a PFVS, " + std::to_string(not_minimal) + " F not a minimal FVS" + first_bad;
  return o;
}

double mean_solve_ms(std::size_t n, std::size_t tau, std::size_t tau_plus, std::size_t reps, double* mean_p) {
  double total = 0.0, p = 0.0;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    const auto gen = generate({n, tau, tau_plus, 3, 1000 + rep});
    const auto start = Clock::now();
    const auto report = solve(gen.net);
    total += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    p += static_cast<double>(report.pfvs.size());
  }
  if (mean_p)
    *mean_p = p / static_cast<double>(reps);
  return total / static_cast<double>(reps);
}

Outcome scaling_trend() {
  double p5 = 0, p10 = 0;
  const double t5 = mean_solve_ms(100, 15, 5, 30, &p5);
  const double t10 = mean_solve_ms(100, 15, 10, 30, &p10);
  const double ratio = t10 / t5;

  const std::vector<double> sizes{100, 300, 500};
  std::vector<double> times;
  for (double n : sizes)
    times.push_back(mean_solve_ms(static_cast<std::size_t>(n), 15, 5, 10, nullptr));
  // Least-squares slope of log t against log n.
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    mx += std::log(sizes[i]);
    my += std::log(times[i]);
  }
  mx /= 3;
  my /= 3;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    sxy += (std::log(sizes[i]) - mx) * (std::log(times[i]) - my);
    sxx += (std::log(sizes[i]) - mx) * (std::log(sizes[i]) - mx);
  }
  const double exponent = sxy / sxx;

  Outcome o;
  o.pass = ratio >= 8.0 && exponent < 3.0;
  std::ostringstream d;
  d.precision(3);
  d << "tau+=5: " << t5 << " ms (|P|=" << p5 << "), tau+=10: " << t10 << " ms (|P|=" << p10
    << "), ratio " << ratio << " (>= 8); n=100/300/500: " << times[0] << "/" << times[1] << "/" << times[2]
    << " ms, exponent " << exponent << " (< 3)";
  o.detail = d.str();
  return o;
}

Outcome min_order_keys() {
  const auto g = seven_vertex_graph();
  const auto deg = degrees(g);
  const auto order = min_order(g);
  bool sorted = true;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto& a = deg[order[i - 1]];
    const auto& b = deg[order[i]];
    sorted = sorted && (a.total < b.total || (a.total == b.total && a.in <= b.in));
  }
  auto group = [&](std::size_t from, std::size_t to) {
    std::vector<std::size_t> vs(order.begin() + static_cast<long>(from), order.begin() + static_cast<long>(to));
    std::sort(vs.begin(), vs.end());
    return vs;
  };
  const std::vector<std::size_t> totals{8, 5, 5, 5, 1, 5, 5}, ins{4, 3, 2, 3, 0, 3, 2};
  bool table = true;
  for (std::size_t v = 0; v < 7; ++v)
    table = table && deg[v].total == totals[v] && deg[v].in == ins[v];
  Outcome o;
  o.pass = sorted && table && group(0, 1) == zero_based({5}) && group(1, 3) == zero_based({3, 7}) &&
           group(3, 6) == zero_based({2, 4, 6}) && group(6, 7) == zero_based({1});
  std::string s;
  for (auto v : order)
    s += std::to_string(v + 1) + " ";
  o.detail = "order " + s + (table ? "degree table matches" : "degree table differs");
  return o;
}

} // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"scheduled solver on the 8-component example", scheduled_trace},
      {"PFVS algorithm trace on the 8-component example", pfvs_trace},
      {"fixing chain and reduced network", fixing_chain},
      {"signed interaction graph and cycle signs", interaction_graph},
      {"one-pass sequential schedules", one_pass_schedules},
      {"solver against exhaustive search, 500 networks", oracle_equivalence},
      {"networks without positive cycles, 200 networks", no_positive_cycle_suite},
      {"PFVS and minimal FVS validity, 300 graphs", pfvs_validity},
      {"runtime trend in the PFVS size", scaling_trend},
      {"min-order degree keys", min_order_keys},
  };
  // Optional argument: run a single criterion.
  std::size_t only = 0;
  if (argc > 1)
    only = static_cast<std::size_t>(std::stoul(argv[1]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != i + 1)
      continue;
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failures += !out.pass;
    std::cout << "criterion " << (i + 1) << ": " << (out.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << " | " << out.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
