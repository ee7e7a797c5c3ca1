#include "twistpoly/ratfunc.hpp"

#include <sstream>

namespace twistpoly {

namespace {
thread_local NormMode g_mode = NormMode::Full;
}

NormMode norm_mode() { return g_mode; }

NormModeGuard::NormModeGuard(NormMode m) : saved_(g_mode) { g_mode = m; }
NormModeGuard::~NormModeGuard() { g_mode = saved_; }

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.vars(), 1)) { normalize(); }

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!same_vars(num_.vars(), den_.vars())) throw ArithmeticError("mismatched VarTable");
  if (den_.is_zero()) throw ArithmeticError("zero denominator");
  normalize();
}

RatFunc::RatFunc(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

RatFunc RatFunc::constant(VarTablePtr vars, const Rational& c) {
  return RatFunc(Poly::constant(vars, c));
}

RatFunc RatFunc::variable(VarTablePtr vars, std::string_view name) {
  return RatFunc(Poly::variable(vars, name));
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw ArithmeticError("rational function is not constant");
  return num_.constant_value() / den_.constant_value();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.vars(), 1);
    return;
  }
  if (g_mode == NormMode::Full && !num_.is_constant() && !den_.is_constant()) {
    GcdResult r = poly_gcd_cofactors(num_, den_);
    if (!r.g.is_one()) {
      num_ = std::move(r.a_over_g);
      den_ = std::move(r.b_over_g);
    }
  }
  normalize_content();
}

void RatFunc::normalize_content() {
  // Joint content: num/den = (cn/cd) * pn/pd with pn, pd primitive.
  Rational cn = num_.content(), cd = den_.content();
  Poly pn = num_.scaled(1 / cn), pd = den_.scaled(1 / cd);
  Rational ratio = cn / cd;
  num_ = pn.scaled(ratio.get_num());
  den_ = pd.scaled(ratio.get_den());
  Exponents mn = num_.monomial_content(), md = den_.monomial_content(), m(mn.size());
  bool shift = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = std::min(mn[i], md[i]);
    shift |= m[i] != 0;
  }
  if (shift) {
    num_ = num_.shift_down(m);
    den_ = den_.shift_down(m);
  }
}

RatFunc RatFunc::normalized() const {
  NormModeGuard g(NormMode::Full);
  return RatFunc(num_, den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw ArithmeticError("division by zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return RatFunc(num_.pow(k), den_.pow(k));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (g_mode == NormMode::Full && !a.den_.is_constant() && !b.den_.is_constant()) {
    GcdResult r = poly_gcd_cofactors(a.den_, b.den_);
    return RatFunc(a.num_ * r.b_over_g + b.num_ * r.a_over_g, a.den_ * r.b_over_g);
  }
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(Poly(a.vars()));
  if (g_mode == NormMode::Full) {
    // Cancel across before multiplying so the products stay small.
    GcdResult r1 = poly_gcd_cofactors(a.num_, b.den_);
    GcdResult r2 = poly_gcd_cofactors(b.num_, a.den_);
    RatFunc out(r1.a_over_g * r2.a_over_g, r2.b_over_g * r1.b_over_g, RatFunc::Raw{});
    out.normalize_content();
    return out;
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (!same_vars(a.vars(), b.vars())) return false;
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

void RatFunc::write(std::ostream& os) const {
  os << '(';
  num_.write(os);
  os << ")/(";
  den_.write(os);
  os << ')';
}

std::string RatFunc::to_string() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  f.write(os);
  return os;
}

bool is_zero(const RatFunc& f) { return f.is_zero(); }
RatFunc one_like(const RatFunc& f) { return RatFunc::constant(f.vars(), 1); }

Rational evaluate(const RatFunc& f, const std::vector<Rational>& point) {
  Rational d = evaluate(f.den(), point);
  if (d == 0) throw DenominatorVanishes();
  return evaluate(f.num(), point) / d;
}

Rational evaluate(const RatFunc& f, const std::map<std::string, Rational>& point) {
  Rational d = evaluate(f.den(), point);
  if (d == 0) throw DenominatorVanishes();
  return evaluate(f.num(), point) / d;
}

namespace {

Poly substitute_poly(const Poly& p, std::size_t li, std::size_t mi, int sign, long e, long shift) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term u = t;
    long a = t.e[li];
    long b = static_cast<long>(t.e[mi]) + e * a + shift;
    if (b < 0) throw ArithmeticError("basis change produced a negative exponent");
    u.e[mi] = static_cast<std::uint32_t>(b);
    if (sign < 0 && (a & 1)) u.c = -u.c;
    out.push_back(std::move(u));
  }
  return Poly::from_terms(p.vars(), std::move(out));
}

}  // namespace

RatFunc substitute_basis(const RatFunc& f, int sign, long e) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("basis sign must be +1 or -1");
  const std::size_t li = f.vars()->require("L"), mi = f.vars()->require("M");
  long shift = 0;
  if (e < 0) shift = -e * static_cast<long>(std::max(f.num().degree(li), f.den().degree(li)));
  // The substitution is invertible over Laurent polynomials, so a reduced
  // input can only pick up common powers of M.
  RatFunc out(substitute_poly(f.num(), li, mi, sign, e, shift), substitute_poly(f.den(), li, mi, sign, e, shift),
              RatFunc::Raw{});
  if (norm_mode() == NormMode::Full && !f.num().is_zero())
    out.normalize_content();
  else
    out.normalize();
  return out;
}

}  // namespace twistpoly
