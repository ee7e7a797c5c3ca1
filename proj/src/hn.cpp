#include "twistpoly/hn.hpp"

namespace twistpoly {

Poly H(int n) {
  if (n < 1) throw std::invalid_argument("H_n needs n >= 1");
  const VarTablePtr& v = tail_vars();
  std::vector<Term> terms;
  terms.push_back({Exponents{std::uint32_t(2 * n), 0, 0}, 1});
  for (int a = 0; a <= n - 1; ++a)
    for (int b = 0; a + b <= n - 1; ++b) {
      std::uint64_t c = binomial(n - 1 - a, b) * binomial(n - b, a);
      if (!c) continue;
      Rational coef(Integer(std::to_string(c)));
      if ((n - a - b) % 2) coef = -coef;
      terms.push_back({Exponents{std::uint32_t(2 * a), std::uint32_t(2 * b), std::uint32_t(2 * (n - a - b))}, coef});
    }
  return Poly::from_terms(v, std::move(terms));
}

Poly filling_symbolic(int n) {
  const VarTablePtr& v = tail_vars();
  return H(n) - Poly::monomial(v, Exponents{std::uint32_t(n - 1), std::uint32_t(n), 1}, 1);
}

bool h_recurrence_check(int n, bool flip) {
  if (n < 4) throw std::invalid_argument("recurrence check needs n >= 4");
  const VarTablePtr& v = tail_vars();
  Poly corr = Poly::monomial(v, Exponents{std::uint32_t(n - 3), std::uint32_t(n - 2), 1}, 1);
  Poly sq = corr * corr;
  Poly lhs = H(n - 1) * H(n - 3);
  Poly h2 = H(n - 2);
  Poly rhs = flip ? h2 * h2 + sq : h2 * h2 - sq;
  return lhs == rhs;
}

namespace {

Poly H_poly(int n, const Poly& f, const Poly& o, const Poly& p) {
  const Poly u = f * f, v = o * o, w = p * p;
  const Poly step = u + v - w, uv = u * v;
  Poly prev = Poly::constant(f.vars(), 1), cur = u - w;
  for (int k = 2; k <= n; ++k) {
    Poly next = cur * step - uv * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly lcm(const Poly& a, const Poly& b) {
  GcdResult r = poly_gcd_cofactors(a, b);
  return a * r.b_over_g;
}

}  // namespace

RatFunc filling_poly(const TailContext<RatFunc>& c, bool tip_matches_tail) {
  if (!tip_matches_tail) throw TipMismatch();
  if (c.n < 1) throw std::invalid_argument("tail length must be >= 1");
  Poly d = lcm(lcm(c.f.den(), c.o.den()), c.p.den());
  auto lift = [&](const RatFunc& x) { return x.num() * *divide_exact(d, x.den()); };
  const Poly F = lift(c.f), O = lift(c.o), Pp = lift(c.p);
  Poly num = H_poly(c.n, F, O, Pp) - F.pow(c.n - 1) * O.pow(c.n) * Pp;
  return RatFunc(std::move(num), d.pow(2 * c.n));
}

}  // namespace twistpoly
