#pragma once

#include <stdexcept>

#include "twistpoly/matchings.hpp"
#include "twistpoly/quadext.hpp"
#include "twistpoly/ratfunc.hpp"

namespace twistpoly {

template <class X>
X power(const X& x, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  X r = one_like(x), b = x;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

// H_n in g_f, g_o, g_p, expanded from the binomial-sum definition.
Poly H(int n);
// H_n - g_f^(n-1) g_o^n g_p
Poly filling_symbolic(int n);

// H_(n-1) H_(n-3) = H_(n-2)^2 - (g_f^(n-3) g_o^(n-2) g_p)^2; a nonzero
// `flip` negates the correction term (negative control).
bool h_recurrence_check(int n, bool flip = false);

template <class X>
struct TailContext {
  X f, o, p;
  int n;
};

template <class X>
X exchange_step(const X& f, const X& o, const X& p) {
  if (is_zero(o)) throw ArithmeticError("exchange step with zero old-slope variable");
  return (f * f - p * p) / o;
}

// H_n(f, o, p) from H_k = H_(k-1) (f^2 + o^2 - p^2) - f^2 o^2 H_(k-2).
template <class X>
X H_value(int n, const X& f, const X& o, const X& p) {
  if (n < 1) throw std::invalid_argument("H_n needs n >= 1");
  const X u = f * f, v = o * o, w = p * p;
  const X step = u + v - w, uv = u * v;
  X prev = one_like(f), cur = u - w;
  for (int k = 2; k <= n; ++k) {
    X next = cur * step - uv * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <class X>
X tail_collapse(const TailContext<X>& c) {
  if (c.n < 1) throw std::invalid_argument("tail length must be >= 1");
  if (is_zero(c.o) || (c.n > 1 && is_zero(c.f))) throw ArithmeticError("tail collapse with zero variable");
  return H_value(c.n, c.f, c.o, c.p) / (power(c.f, c.n - 1) * power(c.o, c.n));
}

// n exchange steps along a tail: (f, o, p) -> (h, f, p).
template <class X>
X iterate_exchange(const TailContext<X>& c) {
  if (c.n < 1) throw std::invalid_argument("tail length must be >= 1");
  X f = c.f, o = c.o;
  X h = exchange_step(f, o, c.p);
  for (int k = 1; k < c.n; ++k) {
    o = f;
    f = h;
    h = exchange_step(f, o, c.p);
  }
  return h;
}

class TipMismatch : public std::invalid_argument {
 public:
  TipMismatch() : std::invalid_argument("filling polynomial needs the tip in the direction of the tail") {}
};

template <class X>
X filling_poly(const TailContext<X>& c, bool tip_matches_tail = true) {
  if (!tip_matches_tail) throw TipMismatch();
  if (c.n < 1) throw std::invalid_argument("tail length must be >= 1");
  return H_value(c.n, c.f, c.o, c.p) - power(c.f, c.n - 1) * power(c.o, c.n) * c.p;
}

// Rational-function inputs go through one common denominator so only a
// single normalisation of the large result is needed.
RatFunc filling_poly(const TailContext<RatFunc>& c, bool tip_matches_tail = true);

}  // namespace twistpoly
