// Dense modular gcd over Z (Brown): images modulo word-size primes,
// recursive evaluation/interpolation in the last variable, CRT across primes,
// trial division to certify the candidate.

#include <algorithm>
#include <functional>
#include <map>

#include "twistpoly/poly.hpp"

namespace twistpoly {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p - b); }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 neg(u64 a) const { return a ? p - a : 0; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (!a) throw ArithmeticError("inverse of zero mod p");
    return pow(a, p - 2);
  }
  u64 reduce(const Integer& z) const { return mpz_fdiv_ui(z.get_mpz_t(), p); }
};

u64 nth_prime(std::size_t i) {
  static std::vector<u64> cache;
  while (cache.size() <= i) {
    Integer z;
    if (cache.empty())
      mpz_ui_pow_ui(z.get_mpz_t(), 2, 62);
    else
      z = Integer(std::to_string(cache.back()));
    mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
    cache.push_back(std::stoull(z.get_str()));
  }
  return cache[i];
}

// ---- univariate, ascending coefficients ----

using UPoly = std::vector<u64>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 ueval(const UPoly& a, u64 x, const Field& F) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

void uscale(UPoly& a, u64 s, const Field& F) {
  for (auto& x : a) x = F.mul(x, s);
  trim(a);
}

UPoly umonic(UPoly a, const Field& F) {
  if (!a.empty()) uscale(a, F.inv(a.back()), F);
  return a;
}

// a = q*b + r
void udivmod(UPoly a, const UPoly& b, const Field& F, UPoly& q, UPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const u64 ib = F.inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    u64 c = F.mul(a[i], ib);
    if (!c) continue;
    std::size_t shift = i + 1 - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
  }
  trim(a);
  trim(q);
  r = std::move(a);
}

UPoly ugcd(UPoly a, UPoly b, const Field& F) {
  trim(a);
  trim(b);
  UPoly q, r;
  while (!b.empty()) {
    udivmod(a, b, F, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a), F);
}

UPoly udiv_exact(const UPoly& a, const UPoly& b, const Field& F) {
  UPoly q, r;
  udivmod(a, b, F, q, r);
  if (!r.empty()) throw ArithmeticError("inexact univariate division mod p");
  return q;
}

// ---- multivariate mod p ----

struct MTerm {
  Exponents e;
  u64 c;
};
using MPoly = std::vector<MTerm>;  // descending lex, nonzero

bool is_const(const MPoly& a) {
  if (a.size() != 1) return a.empty();
  for (auto x : a[0].e)
    if (x) return false;
  return true;
}

MPoly mmonic(MPoly a, const Field& F) {
  if (a.empty()) return a;
  u64 s = F.inv(a[0].c);
  for (auto& t : a) t.c = F.mul(t.c, s);
  return a;
}

// Grouping by the exponents of variables 0..v-1; each group is a dense
// polynomial in variable v.
struct Rec {
  std::vector<Exponents> prefix;
  std::vector<UPoly> coef;
};

bool same_prefix(const Exponents& a, const Exponents& b, std::size_t v) {
  for (std::size_t i = 0; i < v; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Rec to_rec(const MPoly& a, std::size_t v) {
  Rec r;
  for (const auto& t : a) {
    if (r.prefix.empty() || !same_prefix(r.prefix.back(), t.e, v)) {
      Exponents p = t.e;
      p[v] = 0;
      r.prefix.push_back(std::move(p));
      r.coef.emplace_back();
    }
    auto& u = r.coef.back();
    if (u.size() <= t.e[v]) u.resize(t.e[v] + 1, 0);
    u[t.e[v]] = t.c;
  }
  return r;
}

MPoly from_groups(const std::vector<Exponents>& prefix, const std::vector<UPoly>& coef, std::size_t v) {
  MPoly out;
  for (std::size_t g = 0; g < prefix.size(); ++g)
    for (std::size_t d = coef[g].size(); d-- > 0;) {
      if (!coef[g][d]) continue;
      Exponents e = prefix[g];
      e[v] = static_cast<std::uint32_t>(d);
      out.push_back({std::move(e), coef[g][d]});
    }
  return out;
}

MPoly eval_rec(const Rec& r, u64 beta, const Field& F) {
  MPoly out;
  for (std::size_t g = 0; g < r.prefix.size(); ++g) {
    u64 val = ueval(r.coef[g], beta, F);
    if (val) out.push_back({r.prefix[g], val});
  }
  return out;
}

bool zero_prefix(const Exponents& e) {
  for (auto x : e)
    if (x) return false;
  return true;
}

MPoly lift_upoly(const UPoly& c, std::size_t v, std::size_t nv) {
  return from_groups({Exponents(nv, 0)}, {c}, v);
}

struct Splitmix {
  u64 s;
  u64 next() {
    u64 z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Monic gcd of a and b, polynomials in variables 0..k-1.
MPoly gcd_mod(const MPoly& a, const MPoly& b, std::size_t k, const Field& F, std::size_t nv) {
  if (a.empty()) return mmonic(b, F);
  if (b.empty()) return mmonic(a, F);
  if (k == 0 || is_const(a) || is_const(b)) return {{Exponents(nv, 0), 1}};
  const std::size_t v = k - 1;
  Rec ra = to_rec(a, v), rb = to_rec(b, v);

  UPoly ca, cb;
  for (const auto& u : ra.coef) ca = ugcd(ca, u, F);
  for (const auto& u : rb.coef) cb = ugcd(cb, u, F);
  const UPoly c = ugcd(ca, cb, F);
  for (auto& u : ra.coef) u = udiv_exact(u, ca, F);
  for (auto& u : rb.coef) u = udiv_exact(u, cb, F);

  const bool a_trivial = ra.prefix.size() == 1 && zero_prefix(ra.prefix[0]);
  const bool b_trivial = rb.prefix.size() == 1 && zero_prefix(rb.prefix[0]);
  if (a_trivial || b_trivial) return mmonic(lift_upoly(c, v, nv), F);

  const UPoly& lca = ra.coef.front();
  const UPoly& lcb = rb.coef.front();
  const UPoly gam = ugcd(lca, lcb, F);
  int dega = 0, degb = 0;
  for (const auto& u : ra.coef) dega = std::max(dega, udeg(u));
  for (const auto& u : rb.coef) degb = std::max(degb, udeg(u));
  const int bound = udeg(gam) + std::min(dega, degb);

  std::map<Exponents, UPoly, std::greater<>> interp;
  UPoly q{1};
  std::optional<Exponents> lm;
  int npts = 0;
  Splitmix rng{F.p ^ (0x5bd1e995ULL * (k + 1))};
  for (int attempt = 0; attempt < 8 * bound + 256; ++attempt) {
    const u64 beta = rng.next() % (F.p - 1) + 1;
    if (!ueval(lca, beta, F) || !ueval(lcb, beta, F)) continue;
    MPoly g = gcd_mod(eval_rec(ra, beta, F), eval_rec(rb, beta, F), v, F, nv);
    if (is_const(g)) return mmonic(lift_upoly(c, v, nv), F);
    const u64 gb = ueval(gam, beta, F);
    for (auto& t : g) t.c = F.mul(t.c, gb);
    if (!lm || g[0].e < *lm) {
      interp.clear();
      for (auto& t : g) interp[t.e] = UPoly{t.c};
      q = UPoly{F.neg(beta), 1};
      lm = g[0].e;
      npts = 1;
    } else if (g[0].e > *lm) {
      continue;
    } else {
      const u64 iq = F.inv(ueval(q, beta, F));
      std::map<Exponents, u64, std::greater<>> gv;
      for (auto& t : g) gv[t.e] = t.c;
      for (auto& [key, val] : gv) interp.try_emplace(key);
      for (auto it = interp.begin(); it != interp.end();) {
        auto f = gv.find(it->first);
        u64 target = f == gv.end() ? 0 : f->second;
        u64 delta = F.mul(F.sub(target, ueval(it->second, beta, F)), iq);
        if (delta) {
          UPoly add = q;
          uscale(add, delta, F);
          auto& h = it->second;
          if (h.size() < add.size()) h.resize(add.size(), 0);
          for (std::size_t i = 0; i < add.size(); ++i) h[i] = F.add(h[i], add[i]);
          trim(h);
        }
        if (it->second.empty())
          it = interp.erase(it);
        else
          ++it;
      }
      q = umul(q, UPoly{F.neg(beta), 1}, F);
      ++npts;
    }
    if (npts > bound) {
      std::vector<Exponents> prefix;
      std::vector<UPoly> coef;
      UPoly hc;
      for (auto& [key, val] : interp) hc = ugcd(hc, val, F);
      for (auto& [key, val] : interp) {
        prefix.push_back(key);
        coef.push_back(umul(udiv_exact(val, hc, F), c, F));
      }
      return mmonic(from_groups(prefix, coef, v), F);
    }
  }
  throw ArithmeticError("modular gcd: no usable evaluation points");
}

MPoly reduce_mod(const Poly& a, const Field& F) {
  MPoly out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    u64 c = F.reduce(t.c.get_num());
    if (c) out.push_back({t.e, c});
  }
  return out;
}

struct IntGcd {
  Poly g, a_over_g, b_over_g;
};

// a, b primitive, integral, positive leading coefficient, not constant.
IntGcd gcd_primitive(const Poly& a, const Poly& b) {
  const VarTablePtr& vars = a.vars();
  const std::size_t nv = a.nvars();
  const Integer lca = a.leading().c.get_num(), lcb = b.leading().c.get_num();
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), lca.get_mpz_t(), lcb.get_mpz_t());

  std::map<Exponents, Integer, std::greater<>> residues;
  std::optional<Exponents> lm;
  Integer modulus = 1;
  std::optional<Poly> previous;
  for (std::size_t pi = 0; pi < 400; ++pi) {
    const Field F{nth_prime(pi)};
    if (!F.reduce(lca) || !F.reduce(lcb)) continue;
    MPoly g = gcd_mod(reduce_mod(a, F), reduce_mod(b, F), nv, F, nv);
    if (is_const(g)) return {Poly::constant(vars, 1), a, b};
    const u64 gm = F.reduce(gamma);
    for (auto& t : g) t.c = F.mul(t.c, gm);
    const Integer P(std::to_string(F.p));
    if (!lm || g[0].e < *lm) {
      residues.clear();
      for (auto& t : g) residues[t.e] = Integer(std::to_string(t.c));
      modulus = P;
      lm = g[0].e;
      previous.reset();
    } else if (g[0].e > *lm) {
      continue;
    } else {
      // r' = r + m * ((g - r) * m^{-1} mod p)
      const u64 minv = F.inv(F.reduce(modulus));
      std::map<Exponents, u64, std::greater<>> gv;
      for (auto& t : g) gv[t.e] = t.c;
      for (auto& [key, val] : gv) residues.try_emplace(key, 0);
      for (auto& [key, r] : residues) {
        auto f = gv.find(key);
        u64 target = f == gv.end() ? 0 : f->second;
        u64 k = F.mul(F.sub(target, F.reduce(r)), minv);
        if (k) r += modulus * Integer(std::to_string(k));
      }
      modulus *= P;
    }
    const Integer half = modulus / 2;
    std::vector<Term> terms;
    for (auto& [key, r] : residues) {
      if (r == 0) continue;
      Integer s = r > half ? Integer(r - modulus) : r;
      terms.push_back({key, Rational(s)});
    }
    Poly rec = Poly::from_sorted(vars, std::move(terms));
    const bool stable = previous && *previous == rec;
    const bool small = mpz_sizeinbase(rec.max_abs_numerator().get_mpz_t(), 2) + 24 <
                       mpz_sizeinbase(modulus.get_mpz_t(), 2);
    if (stable || small) {
      Poly cand = rec.primitive();
      auto qa = divide_exact(a, cand);
      if (qa) {
        auto qb = divide_exact(b, cand);
        if (qb) return {cand, *qa, *qb};
      }
    }
    previous = std::move(rec);
  }
  throw ArithmeticError("modular gcd did not stabilize");
}

}  // namespace

GcdResult poly_gcd_cofactors(const Poly& a, const Poly& b) {
  if (!same_vars(a.vars(), b.vars())) throw ArithmeticError("mismatched VarTable");
  const VarTablePtr& vars = a.vars();
  if (a.is_zero() && b.is_zero()) return {Poly(vars), Poly(vars), Poly(vars)};
  if (a.is_zero()) {
    Poly g = b.primitive();
    return {g, Poly(vars), Poly::constant(vars, b.content())};
  }
  if (b.is_zero()) {
    Poly g = a.primitive();
    return {g, Poly::constant(vars, a.content()), Poly(vars)};
  }
  const Rational ca = a.content(), cb = b.content();
  const Poly pa = a.scaled(1 / ca), pb = b.scaled(1 / cb);
  const Exponents ma = pa.monomial_content(), mb = pb.monomial_content();
  Exponents m(ma.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(ma[i], mb[i]);
  Poly a1 = pa.shift_down(ma), b1 = pb.shift_down(mb);
  Exponents ra(ma.size()), rb(mb.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    ra[i] = ma[i] - m[i];
    rb[i] = mb[i] - m[i];
  }
  if (a1.is_constant() || b1.is_constant()) {
    Poly g = Poly::monomial(vars, m, 1);
    return {g, pa.shift_down(m).scaled(ca), pb.shift_down(m).scaled(cb)};
  }
  IntGcd r = gcd_primitive(a1, b1);
  return {r.g.shift_up(m), r.a_over_g.shift_up(ra).scaled(ca), r.b_over_g.shift_up(rb).scaled(cb)};
}

Poly poly_gcd(const Poly& a, const Poly& b) { return poly_gcd_cofactors(a, b).g; }

}  // namespace twistpoly
