#include <doctest.h>

#include "twistpoly/hn.hpp"
#include "twistpoly/parse.hpp"

using namespace twistpoly;

namespace {
Poly tp(const char* s) { return parse_poly(s, tail_vars()); }
RatFunc tr(const char* s) { return RatFunc::variable(tail_vars(), s); }
}  // namespace

TEST_CASE("H_1, H_2, H_3") {
  CHECK(H(1) == tp("g_f^2 - g_p^2"));
  CHECK(H(2) == tp("g_f^4 - 2*g_f^2*g_p^2 + g_p^4 - g_o^2*g_p^2"));
  // Expanded by hand from three exchange steps.
  CHECK(H(3) == tp("g_f^6 - 3*g_f^4*g_p^2 - 2*g_f^2*g_o^2*g_p^2 + 3*g_f^2*g_p^4 - g_o^4*g_p^2 + 2*g_o^2*g_p^4 - "
                   "g_p^6"));
  CHECK_THROWS(H(0));
}

TEST_CASE("H(n) equals the ladder polynomial P(2n)") {
  for (int n = 1; n <= 8; ++n) CHECK(H(n) == P(2 * n));
}

TEST_CASE("recurrence for H_n") {
  for (int n = 4; n <= 10; ++n) {
    CHECK(h_recurrence_check(n));
    CHECK_FALSE(h_recurrence_check(n, true));
  }
}

TEST_CASE("iterated exchange collapses to H_n over a monomial") {
  for (int n = 1; n <= 6; ++n) {
    TailContext<RatFunc> c{tr("g_f"), tr("g_o"), tr("g_p"), n};
    RatFunc h = iterate_exchange(c);
    CHECK(h == tail_collapse(c));
    CHECK(h.num() == H(n));
    CHECK(h.den() == Poly::monomial(tail_vars(), Exponents{std::uint32_t(n - 1), std::uint32_t(n), 0}, 1));
  }
}

TEST_CASE("filling polynomial") {
  CHECK(filling_symbolic(1) == tp("g_f^2 - g_p^2 - g_o*g_p"));
  CHECK(filling_symbolic(2) == H(2) - tp("g_f*g_o^2*g_p"));
  TailContext<RatFunc> c{tr("g_f"), tr("g_o"), tr("g_p"), 3};
  CHECK(filling_poly(c) == RatFunc(filling_symbolic(3)));
  CHECK_THROWS_AS(filling_poly(c, false), TipMismatch);
  TailContext<Rational> q{Rational(3, 2), Rational(-2), Rational(5), 4};
  CHECK(filling_poly(q) == power(q.f, 3) * power(q.o, 4) * (iterate_exchange(q) - q.p));
}

TEST_CASE("generic H_value agrees across coefficient types") {
  Rational f(7, 3), o(-2, 5), p(4);
  for (int n = 1; n <= 6; ++n)
    CHECK(H_value(n, f, o, p) == evaluate(H(n), std::vector<Rational>{f, o, p}));
}
