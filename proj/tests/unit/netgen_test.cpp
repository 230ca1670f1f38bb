#include <doctest.h>

#include "bnfix/cycles.hpp"
#include "bnfix/error.hpp"
#include "bnfix/netgen.hpp"
#include "bnfix/oracle.hpp"
#include "bnfix/solver.hpp"
#include "support.hpp"

using namespace bnfix;
using namespace bnfix::testing;

TEST_CASE("planted transversals") {
  const auto gen = generate({10, 2, 1, 3, 7});
  const auto g = derive(gen.net);
  CHECK(gen.net.size() == 10);
  CHECK(gen.fvs.size() == 2);
  CHECK(gen.pfvs.size() == 1);
  CHECK(brute_tau(g).size == 2);
  CHECK(brute_tau_plus(g).size == 1);
  CHECK(is_fvs(g, gen.fvs));
  CHECK(is_pfvs(g, gen.pfvs));
}

TEST_CASE("acyclic generation") {
  const auto gen = generate({12, 0, 0, 3, 4});
  const auto g = derive(gen.net);
  CHECK(is_acyclic(g, std::vector<std::size_t>{}));
  CHECK(oracle::brute_fixed_points(gen.net).size() == 1);
}

TEST_CASE("generation is deterministic") {
  const auto a = generate({30, 4, 2, 3, 99});
  const auto b = generate({30, 4, 2, 3, 99});
  CHECK(format_network(a.net) == format_network(b.net));
  CHECK(a.fvs == b.fvs);
  CHECK(a.pfvs == b.pfvs);
  CHECK(format_network(generate({30, 4, 2, 3, 100}).net) != format_network(a.net));
}

TEST_CASE("infeasible parameters") {
  CHECK_THROWS_AS(generate({10, 1, 2, 3, 1}), InvalidSetError);
  CHECK_THROWS_AS(generate({5, 3, 1, 3, 1}), InvalidSetError);
  CHECK_THROWS_AS(generate({10, 2, 1, 0, 1}), InvalidSetError);
}

TEST_CASE("property: planted sizes are exact") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 6 + seed % 15;
    const std::size_t tau = 1 + seed % 3;
    const std::size_t tau_plus = seed % (tau + 1);
    const auto gen = generate({n, tau, tau_plus, 1 + seed % 4, seed});
    const auto g = derive(gen.net);
    CHECK(brute_tau(g).size == tau);
    CHECK(brute_tau_plus(g).size == tau_plus);
    for (std::size_t v = 0; v < n; ++v)
      CHECK(gen.net.support(v).size() <= 1 + seed % 4);
  }
}

TEST_CASE("property: solver agrees with the exhaustive search on generated networks") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto gen = generate({8 + seed % 12, 3, 2, 3, seed});
    SolveConfig c;
    c.pfvs = gen.pfvs;
    c.fvs = gen.fvs;
    CHECK(solve(gen.net, c).fixed_points == oracle::brute_fixed_points(gen.net));
    CHECK(solve(gen.net).fixed_points == oracle::brute_fixed_points(gen.net));
  }
}

TEST_CASE("random digraph density") {
  const auto empty = random_digraph(8, 0.0, 0.0, 1);
  CHECK(empty.arcs().empty());
  const auto full = random_digraph(6, 1.0, 1.0, 1);
  CHECK(full.arcs().size() == 2 * 36);
}
