#include <catch2/catch_amalgamated.hpp>

#include "bops/format.hpp"
#include "bops/scenario.hpp"

using namespace bops;

TEST_CASE("a minimal scenario parses and defaults the valuation") {
  const Scenario s = parse_scenario("p=10\nc=4\nc_o=4\nk=1\nM=7");
  CHECK(s.params.p == 10.0);
  CHECK(s.params.c == 4.0);
  CHECK(s.params.c_o == 4.0);
  CHECK(s.params.k == 1.0);
  CHECK(s.params.M == 7.0);
  CHECK(s.params.v == 21.0);
  CHECK_FALSE(s.q_max.has_value());
}

TEST_CASE("comments, blank lines and spacing are accepted") {
  const Scenario s = parse_scenario(
      "# reference point\n"
      "p   =\t10\n"
      "\n"
      "c = 4   # unit cost\n"
      "c_o=4\r\n"
      "k = 1\n"
      "M = 7\n"
      "v = 25\n"
      "q_steps = 200\n");
  CHECK(s.params.v == 25.0);
  REQUIRE(s.q_steps.has_value());
  CHECK(*s.q_steps == 200);
}

TEST_CASE("constraint violations name the offending parameter") {
  CHECK_THROWS_WITH(parse_scenario("p=10\nc=4\nc_o=4\nk=12\nM=7"),
                    Catch::Matchers::ContainsSubstring("k must satisfy"));
  CHECK_THROWS_WITH(parse_scenario("p=10\nc=4\nc_o=8\nk=1\nM=7"),
                    Catch::Matchers::ContainsSubstring("M and c_o"));
  CHECK_THROWS_WITH(parse_scenario("p=4\nc=4\nc_o=4\nk=1\nM=7"),
                    Catch::Matchers::ContainsSubstring("p and c"));
  CHECK_THROWS_WITH(parse_scenario("p=10\nc=4\nc_o=4\nk=1\nM=7\nv=12"),
                    Catch::Matchers::ContainsSubstring("v must satisfy"));
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_scenario("p=10\nc=4\nbogus line\nk=1\nM=7");
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(e.line() == 3);
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("line 3"));
  }

  CHECK_THROWS_WITH(parse_scenario("p=10\nc=4\nc_o=4\nk=1\nM=7\nfoo=2"),
                    Catch::Matchers::ContainsSubstring("unknown key 'foo'"));
  CHECK_THROWS_WITH(parse_scenario("p=10\np=11\nc=4\nc_o=4\nk=1\nM=7"),
                    Catch::Matchers::ContainsSubstring("duplicate key 'p'"));
  CHECK_THROWS_WITH(parse_scenario("p=ten\nc=4\nc_o=4\nk=1\nM=7"),
                    Catch::Matchers::ContainsSubstring("invalid number"));
  CHECK_THROWS_WITH(parse_scenario("p=10\nc=4\nc_o=4\nk=1"),
                    Catch::Matchers::ContainsSubstring("missing key 'M'"));
  CHECK_THROWS_WITH(parse_scenario("p=10\nc=4\nc_o=4\nk=1\nM=\n"),
                    Catch::Matchers::ContainsSubstring("missing value"));
}

TEST_CASE("render and parse round-trip") {
  Scenario s;
  s.params = ModelParams{10.0, 4.0, 4.0, 16.0 / 7.0, 7.0, 21.5};
  CHECK(parse_scenario(render_scenario(s)) == s);

  s.q_max = 6.5;
  s.q_steps = 250;
  s.mu_steps = 333;
  CHECK(parse_scenario(render_scenario(s)) == s);
}

TEST_CASE("double formatting is shortest round-trip") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(4.0) == "4");
  CHECK(format_double(2.625) == "2.625");
  CHECK(format_double(0.1) == "0.1");
  for (double x : {16.0 / 7.0, 1e-9, 12345.6789, 2.0 / 3.0}) {
    CHECK(std::stod(format_double(x)) == x);
  }
}
