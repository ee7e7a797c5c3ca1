#include <doctest.h>

#include "twistpoly/parse.hpp"
#include "twistpoly/poly.hpp"

using namespace twistpoly;

namespace {
const VarTablePtr& lm() {
  static VarTablePtr v = make_vars({"L", "M"});
  return v;
}
Poly pp(const char* s) { return parse_poly(s, lm()); }
}  // namespace

TEST_CASE("canonical text order and integer-cleared coefficients") {
  Poly p = pp("1 - 2*L*M^2 + L^2*M^4");
  CHECK(p.to_string() == "L^2*M^4 - 2*L*M^2 + 1");
  CHECK(pp("0").to_string() == "0");
  CHECK(pp("-M").to_string() == "-M");
  CHECK(p.size() == 3);
  CHECK(p.total_degree() == 6);
}

TEST_CASE("products and powers") {
  Poly l = Poly::variable(lm(), "L"), m = Poly::variable(lm(), "M");
  CHECK((l + m) * (l - m) == l * l - m * m);
  CHECK((l - m * m) * (l + m * m) == l * l - m.pow(4));
  CHECK((l + m).pow(5).size() == 6);
  CHECK((l + m).pow(0) == Poly::constant(lm(), 1));
}

TEST_CASE("evaluation") {
  CHECK(evaluate(pp("L^2 - M^4"), std::vector<Rational>{2, 3}) == -77);
  CHECK(evaluate(pp("L*M - 1"), std::map<std::string, Rational>{{"L", Rational(1, 2)}, {"M", 4}}) == 1);
}

TEST_CASE("exact division and gcd") {
  Poly a = pp("L + M^6"), b = pp("L^2 - M^2"), q(lm());
  CHECK(poly_divides(a, a * b, &q));
  CHECK(q == b);
  CHECK_FALSE(poly_divides(pp("L + M"), pp("L^2 + M^2")));
  CHECK(poly_gcd(a * b, a * pp("L - 3")) == a);
  auto r = poly_gcd_cofactors(pp("L^2 - M^2"), pp("L*M + M^2"));
  CHECK(r.g == pp("L + M"));
}

TEST_CASE("content and bookkeeping") {
  Poly p = pp("6*L^2*M + 4*L*M^3");
  CHECK(p.content() == 2);
  CHECK(p.primitive() == pp("3*L^2*M + 2*L*M^3"));
  CHECK(p.monomial_content() == Exponents{1, 1});
  CHECK(p.max_abs_numerator() == 6);
  CHECK(p.integral());
  CHECK_FALSE(pp("L/2").integral());
}

TEST_CASE("mixing variable tables is rejected") {
  VarTablePtr other = make_vars({"x"});
  CHECK_THROWS(Poly::variable(lm(), "L") + Poly::variable(other, "x"));
  CHECK_THROWS(Poly::variable(lm(), "z"));
}
