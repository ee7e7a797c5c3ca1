#include <doctest.h>

#include "twistpoly/checks.hpp"
#include "twistpoly/families.hpp"
#include "twistpoly/parse.hpp"

using namespace twistpoly;

namespace {

Rational q(const char* s) { return Rational(s); }

// Basis-changed conjugate products at (L, M) = (2, 3) and pretzel fillings at
// the same point, from a separate rational-arithmetic script.
struct Frozen {
  Family family;
  Sign sign;
  int m;
  const char* value;
};

const Frozen kFrozen[] = {
    {Family::Pretzel238, Sign::Positive, 1,
     "3572882670023468261249225483958773002900740090171671388010489/1197092422828674316406250000000000000000"},
    {Family::Pretzel238, Sign::Negative, 1,
     "307860261671800310685711505023826395301124641/168151253906250000000000000000"},
    {Family::Pretzel238, Sign::Negative, 2,
     "94777940998103787726144413195301110165218580317202419393290210428932746952024439417378881/"
     "28274844190244155883789062500000000000000000000000000000000"},
    {Family::Whitehead, Sign::Positive, 1, "15600917892977975334424081/135099050711191781841"},
    {Family::Whitehead, Sign::Positive, 2,
     "241675487878480464113125685806229956316029823388961/18251753503065168694846452658176537349281"},
    {Family::Whitehead, Sign::Negative, 1, "808864870621921/1406408618241"},
    {Family::Whitehead, Sign::Negative, 2, "639341411437318802443804424641/1977985201462558877934081"},
};

}  // namespace

TEST_CASE("family table") {
  const auto& pp = family_spec(Family::Pretzel238, Sign::Positive);
  CHECK(pp.word(2) == "LLRLLL");
  CHECK(pp.knot_name(1) == "T(5,-19,2,2)");
  CHECK(pp.filling_slope(3) == "1/6");
  CHECK(pp.basis_exponent(1) == -92);
  CHECK(family_spec(Family::Pretzel238, Sign::Negative).basis_exponent(1) == 83);
  CHECK(family_spec(Family::Pretzel238, Sign::Negative).knot_name(3) == "T(5,26,2,2)");
  const auto& wn = family_spec(Family::Whitehead, Sign::Negative);
  CHECK(wn.word(1) == "LLRR");
  CHECK(wn.knot_name(2) == "J(2,-8)");
  CHECK(wn.filling_slope(2) == "-1/4");
  CHECK(family_spec(Family::Whitehead, Sign::Positive).basis_exponent(5) == -2);
  CHECK(parse_family("whitehead") == Family::Whitehead);
  CHECK_THROWS(parse_sign("up"));
}

TEST_CASE("frozen values at (2, 3)") {
  const std::vector<Rational> pt{2, 3};
  for (const auto& f : kFrozen) {
    CAPTURE(f.m);
    const FamilySpec& spec = family_spec(f.family, f.sign);
    FillingResult r = run_family(spec, f.m, f.family == Family::Whitehead);
    Rational got = f.family == Family::Pretzel238 ? evaluate(*r.rational, pt) : evaluate(*r.basis_changed, pt);
    CHECK(got == q(f.value));
  }
}

TEST_CASE("pretzel symbolic and numeric pipelines agree") {
  CHECK(numeric_pretzel_filling(Sign::Positive, 2, 2, 3) ==
        q("12765490573783722611526210444769742862189722011677425819917596217702304346529513934332554588028324716974"
          "311616377574019121/"
          "1433030268793825573638605419546365737915039062500000000000000000000000000000000"));
  FillingResult r = run_family(family_spec(Family::Pretzel238, Sign::Negative), 1, false);
  CHECK(evaluate(*r.rational, std::vector<Rational>{Rational(-5, 7), Rational(4, 3)}) ==
        numeric_pretzel_filling(Sign::Negative, 1, Rational(-5, 7), Rational(4, 3)));
}

TEST_CASE("twist knot polynomials") {
  const auto& v = lm_vars();
  CHECK(twist_A(1, Sign::Positive) == parse_poly("L + M^6", v));
  CHECK(twist_A(0, Sign::Negative) == parse_poly("1", v));
  for (int n = 2; n <= 8; ++n) CHECK(twist_recurrence_check(n, Sign::Positive));
  for (int n = 1; n <= 8; ++n) CHECK(twist_recurrence_check(n, Sign::Negative));
  CHECK_FALSE(twist_recurrence_check(3, Sign::Positive, true));
  for (Sign s : {Sign::Positive, Sign::Negative}) CHECK(twist_base_identity_lhs(s) == twist_base_identity_rhs(s));
  CHECK_THROWS(twist_A(0, Sign::Positive));
}

TEST_CASE("twist knot divisibility") {
  for (Sign s : {Sign::Positive, Sign::Negative})
    for (int m = 1; m <= 3; ++m) {
      FillingResult r = run_family(family_spec(Family::Whitehead, s), m);
      CHECK(twist_divides(r));
    }
  FillingResult p = run_family(family_spec(Family::Pretzel238, Sign::Positive), 1);
  CHECK_THROWS(twist_divides(p));
}

TEST_CASE("invariant suites") {
  CheckOptions o;
  o.quick = true;
  o.samples = 5;
  for (const auto& name : suite_names()) {
    for (const auto& r : run_suite(name, o)) {
      CAPTURE(name);
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.pass);
    }
  }
  CHECK_THROWS(run_suite("nope", o));
}
