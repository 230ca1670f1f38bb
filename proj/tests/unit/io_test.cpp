#include <doctest.h>

#include "bnfix/dynamics.hpp"
#include "bnfix/error.hpp"
#include "bnfix/io.hpp"
#include "bnfix/netgen.hpp"
#include "bnfix/oracle.hpp"
#include "bnfix/solver.hpp"
#include "support.hpp"

using namespace bnfix;
using namespace bnfix::testing;

TEST_CASE("fixture networks load") {
  CHECK(fixture("net8").size() == 8);
  CHECK(fixture("loops5").size() == 5);
  CHECK(fixture("chain7").size() == 7);
  CHECK(fixture("negcycle3a").names()[1] == "x2");
}

TEST_CASE("undefined identifier reports its position") {
  try {
    parse_network("a = 1\nc = a & b\n");
    FAIL("expected an exception");
  } catch (const UndefinedIdentifierError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
    CHECK(std::string(e.what()).find("'b'") != std::string::npos);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_network("a = 1\na = 0\n"), DuplicateDefinitionError);
  CHECK_THROWS_AS(parse_network("a = (1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_network("a 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_network("= 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_network("a = 1 &\n"), SyntaxError);
  CHECK_THROWS_AS(parse_network("# nothing\n\n"), SyntaxError);
  CHECK_THROWS_AS(load_network("/nonexistent/file.bn"), Error);
}

TEST_CASE("precedence, comments and forward references") {
  const auto net = parse_network("# header\na = b | c & !b  # trailing\nb = 1\nc = 0\n");
  CHECK(net.size() == 3);
  // b | (c & !b)
  CHECK(net.eval(0, State::from_bits("010")));
  CHECK(net.eval(0, State::from_bits("001")));
  CHECK_FALSE(net.eval(0, State::from_bits("000")));
  CHECK(net.eval(0, State::from_bits("011")));
  const auto paren = parse_network("a = (b | c) & !b\nb = b\nc = c\n");
  CHECK_FALSE(paren.eval(0, State::from_bits("011")));
  CHECK(paren.eval(0, State::from_bits("001")));
}

TEST_CASE("indegree cap") {
  CHECK_THROWS_AS(parse_network("a = b & c\nb = 1\nc = 1\n", 1), ResourceError);
}

TEST_CASE("property: format and parse round trip") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto net = random_network(2 + seed % 10, 4, seed);
    const auto text = format_network(net);
    const auto back = parse_network(text);
    CHECK(format_network(back) == text);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << net.size()); i += 7) {
      const auto x = State::from_index(net.size(), i);
      CHECK(apply(net, x) == apply(back, x));
    }
  }
}

TEST_CASE("arc listing follows the derived graph") {
  const auto net = fixture("loops5");
  const auto g = derive(net);
  const auto text = format_arcs(net, g);
  std::size_t lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == g.arcs().size());
  CHECK(text.find("x5 x1 +\n") != std::string::npos);
  CHECK(text.find("x2 x1 -\n") != std::string::npos);
  const auto brute = oracle::brute_arcs(net);
  CHECK(std::vector<Arc>(g.arcs().begin(), g.arcs().end()) == brute);
}

TEST_CASE("report json layout") {
  const auto net = fixture("net8");
  const auto report = solve(net);
  const auto j = report_json(net, report, "net8", false);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"network", "n", "strategy", "pfvs", "fvs", "schedule",
                                         "candidates_tested", "iterations_per_candidate", "fixed_points"});
  CHECK(j["fixed_points"][0] == "10010000");
  CHECK(j.dump() == report_json(net, solve(net), "net8", false).dump());
  CHECK(report_json(net, report, "net8", true).contains("timings_ms"));
  CHECK(report_text(net, report, "net8").find("10010000") != std::string::npos);
}
