#include <doctest.h>

#include "twistpoly/parse.hpp"
#include "twistpoly/ptolemy.hpp"

using namespace twistpoly;

TEST_CASE("precedence, powers and negative exponents") {
  const auto& v = lm_vars();
  CHECK(parse_poly("2*L^2 - (M + 1)^2", v) == parse_poly("2*L^2 - M^2 - 2*M - 1", v));
  CHECK(parse_ratfunc("M^-3*(L-1)^-2", v) == parse_ratfunc("1/(M^3*(L-1)^2)", v));
  CHECK(parse_ratfunc("-L/M^2", v) == -parse_ratfunc("L", v) / parse_ratfunc("M^2", v));
  CHECK(parse_poly("3/2*L", v) == Poly::variable(v, "L").scaled(Rational(3, 2)));
}

TEST_CASE("slope identifiers") {
  VarTablePtr v = make_vars({"L", "M", "g_-1/1", "g_0(23)", "g_1/0"});
  Poly p = parse_poly("g_-1/1*g_1/0 - g_0(23)^2", v);
  CHECK(p.size() == 2);
  CHECK(scan_identifiers("L*g_-1/1 + g_0(23)^2 - L") == std::vector<std::string>{"L", "g_-1/1", "g_0(23)"});
}

TEST_CASE("errors") {
  const auto& v = lm_vars();
  CHECK_THROWS_AS(parse_poly("L +", v), ParseError);
  CHECK_THROWS_AS(parse_poly("Q", v), ParseError);
  CHECK_THROWS_AS(parse_poly("L^-1", v), ParseError);
  CHECK_THROWS_AS(parse_poly("(L", v), ParseError);
  CHECK_THROWS_AS(parse_equation("L*M"), ParseError);
}
