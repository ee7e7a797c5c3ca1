#include <doctest.h>

#include "twistpoly/families.hpp"
#include "twistpoly/parse.hpp"

using namespace twistpoly;

namespace {
RatFunc rf(const char* s) { return parse_ratfunc(s, lm_vars()); }
}  // namespace

TEST_CASE("equation parsing") {
  PtolemyEq e = parse_equation("[x] L*g_1/0*g_2/1 - M^2*g_3/1^2 = 0");
  CHECK(e.label == "x");
  CHECK(e.terms.size() == 2);
  CHECK(e.variables() == std::vector<std::string>{"g_1/0", "g_2/1", "g_3/1"});
  CHECK_THROWS_AS(parse_equation("[y] g_1/0 = 0"), ParseError);
  CHECK(pretzel_equations().size() == 7);
  CHECK(whitehead_equations().size() == 7);
  CHECK_THROWS_AS(find_equation(pretzel_equations(), "nope"), PipelineError);
}

TEST_CASE("generated step equations match the fixtures") {
  auto ls = walk_labels(family_spec(Family::Pretzel238, Sign::Positive).walk(1));
  CHECK(classify(find_equation(pretzel_equations(), "step0"), ls[0]) == EqRelation::Identical);
  CHECK(classify(find_equation(pretzel_equations(), "step3pos"), ls[3]) == EqRelation::Identical);
  auto wl = walk_labels(family_spec(Family::Whitehead, Sign::Positive).walk(1));
  CHECK(classify(find_equation(whitehead_equations(), "4WH"), wl[0]) == EqRelation::Identical);
  CHECK(classify(find_equation(whitehead_equations(), "5WH"), wl[1]) == EqRelation::Negated);
  CHECK(classify(find_equation(whitehead_equations(), "step2pos"), wl[2]) == EqRelation::PivotFanSwapped);
  CHECK(classify(find_equation(pretzel_equations(), "tet0"), ls[0]) == EqRelation::Different);
}

TEST_CASE("pretzel base values") {
  auto a = solve_pretzel_base();
  CHECK(a.at("g_1/0") == rf("(L^2 - M^4)/(M*(L^2 - M^2))"));
  CHECK(a.at("g_4/1") == rf("L") / (rf("M") * a.at("g_1/0") - rf("M^2")));
  CHECK(a.at("g_3/1") == rf("1"));
}

TEST_CASE("whitehead base values") {
  WhiteheadBase b = solve_whitehead_base();
  CHECK(*b.radicand == rf("(L - 1)*(L + M^2)/(L*(M^2 - 1))"));
  CHECK(b.values.at("g_3/1").a() == rf("(L^2 - M^2)/(L*(1 - M^2))"));
  CHECK(b.values.at("g_2/1").b() == rf("(L - M^2)/(M*(L - 1))"));
  WhiteheadBase c = solve_whitehead_base(-1);
  CHECK(c.values.at("g_2/1").b() == -b.values.at("g_2/1").b());
  CHECK_THROWS(solve_whitehead_base(0));
}

TEST_CASE("pipeline reproduces the shipped closed forms") {
  const auto& pv = pretzel_chain(Sign::Positive).values;
  for (const char* k : {"1/0", "1/1", "0/1", "1/2"}) CHECK(pv.at(std::string("g_") + k) == closed_form("pretzel238", k));
  CHECK(pretzel_chain(Sign::Negative).values.at("g_-1/1") == -closed_form("pretzel238", "-1/1"));
  CHECK(whitehead_chain(Sign::Positive).values.at("g_1/1").a() == closed_form("whitehead", "1/1"));
  CHECK(whitehead_chain(Sign::Positive).values.at("g_1/2").a() == closed_form("whitehead", "1/2"));
  CHECK(whitehead_chain(Sign::Negative).values.at("g_-1/1").a() == closed_form("whitehead", "-1/1"));
}

TEST_CASE("solver error paths") {
  Assignment<RatFunc> a;
  a.emplace("g_1/0", rf("L"));
  a.emplace("g_3/1", rf("1"));
  a.emplace("g_4/1", rf("M"));
  const PtolemyEq& s0 = find_equation(pretzel_equations(), "step0");
  CHECK(solve_linear_step(s0, "g_2/1", a, RatFuncLift{}) == rf("(L^2 - 1)/M"));
  CHECK_THROWS_AS(solve_linear_step(s0, "g_7/1", a, RatFuncLift{}), PipelineError);
  CHECK_THROWS_AS(solve_linear_step(find_equation(pretzel_equations(), "tet0"), "g_3/1", a, RatFuncLift{}),
                  PipelineError);
  a.at("g_4/1") = rf("0");
  CHECK_THROWS_AS(solve_linear_step(s0, "g_2/1", a, RatFuncLift{}), PipelineError);
  Assignment<RatFunc> empty;
  CHECK_THROWS_AS(substitute(s0, empty, RatFuncLift{}), PipelineError);
}

TEST_CASE("numeric pipeline at a point") {
  Rational L = 2, M = 3;
  PointLift lift{{L, M}};
  Assignment<Rational> a;
  a.emplace("g_3/1", 1);
  auto [prod, g41] = solve_monomial_system(find_equation(pretzel_equations(), "tet0"),
                                           find_equation(pretzel_equations(), "tet1"), {"g_1/0", "g_4/1"},
                                           {"g_4/1"}, a, lift);
  CHECK(prod / g41 == Rational(77, 15));
}
