#include "twistpoly/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "kronecker.hpp"

namespace twistpoly {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational number: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable " + n);
  }
}

std::optional<std::size_t> VarTable::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarTable::require(std::string_view name) const {
  auto i = index(name);
  if (!i) throw std::invalid_argument("unknown variable " + std::string(name));
  return *i;
}

VarTablePtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

bool same_vars(const VarTablePtr& a, const VarTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

bool term_greater(const Term& a, const Term& b) { return a.e > b.e; }

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Poly schoolbook(const Poly& a, const Poly& b) {
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) out.push_back({add_exps(x.e, y.e), x.c * y.c});
  return Poly::from_terms(a.vars(), std::move(out));
}

}  // namespace

Poly::Poly(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("null VarTable");
}

Poly Poly::constant(VarTablePtr vars, const Rational& c) {
  Poly p(std::move(vars));
  if (c != 0) p.terms_.push_back({Exponents(p.nvars(), 0), c});
  return p;
}

Poly Poly::variable(VarTablePtr vars, std::size_t index, std::uint32_t power) {
  Exponents e(vars->size(), 0);
  e.at(index) = power;
  return monomial(std::move(vars), std::move(e), 1);
}

Poly Poly::variable(VarTablePtr vars, std::string_view name, std::uint32_t power) {
  std::size_t i = vars->require(name);
  return variable(std::move(vars), i, power);
}

Poly Poly::monomial(VarTablePtr vars, Exponents e, const Rational& c) {
  Poly p(std::move(vars));
  if (e.size() != p.nvars()) throw std::invalid_argument("exponent length mismatch");
  if (c != 0) p.terms_.push_back({std::move(e), c});
  return p;
}

Poly Poly::from_terms(VarTablePtr vars, std::vector<Term> terms) {
  Poly p(std::move(vars));
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (t.e.size() != p.nvars()) throw std::invalid_argument("exponent length mismatch");
    if (!p.terms_.empty() && p.terms_.back().e == t.e) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (t.c != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::from_sorted(VarTablePtr vars, std::vector<Term> terms) {
  Poly p(std::move(vars));
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto x : terms_[0].e)
    if (x) return false;
  return true;
}

bool Poly::is_one() const { return is_constant() && !terms_.empty() && terms_[0].c == 1; }

Rational Poly::constant_value() const {
  if (!is_constant()) throw ArithmeticError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].c;
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw ArithmeticError("leading term of zero polynomial");
  return terms_.front();
}

std::uint32_t Poly::degree(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.e[var]);
  return d;
}

std::uint32_t Poly::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = UINT32_MAX;
  for (const auto& t : terms_) d = std::min(d, t.e[var]);
  return d;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) {
    std::uint32_t s = 0;
    for (auto x : t.e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Exponents Poly::degrees() const {
  Exponents d(nvars(), 0);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::max(d[i], t.e[i]);
  return d;
}

bool Poly::integral() const {
  for (const auto& t : terms_)
    if (t.c.get_den() != 1) return false;
  return true;
}

Integer Poly::max_abs_numerator() const {
  Integer m = 0;
  for (const auto& t : terms_)
    if (mpz_cmpabs(t.c.get_num_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.c.get_num());
  return m;
}

Rational Poly::content() const {
  if (terms_.empty()) return 0;
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  if (terms_.front().c < 0) c = -c;
  return c;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (c == 1) return *this;
  return scaled(1 / c);
}

Exponents Poly::monomial_content() const {
  Exponents m(nvars(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = min_degree(i);
  return m;
}

Poly Poly::shift_down(const Exponents& e) const {
  Poly r = *this;
  for (auto& t : r.terms_)
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (t.e[i] < e[i]) throw ArithmeticError("negative exponent in shift");
      t.e[i] -= e[i];
    }
  return r;
}

Poly Poly::shift_up(const Exponents& e) const {
  Poly r = *this;
  for (auto& t : r.terms_)
    for (std::size_t i = 0; i < e.size(); ++i) t.e[i] += e[i];
  return r;
}

void Poly::check_compatible(const Poly& o) const {
  if (!same_vars(vars_, o.vars_)) throw ArithmeticError("mismatched VarTable");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].e > b[j].e)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].e > a[i].e) {
      out.push_back({b[j].e, subtract ? Rational(-b[j].c) : b[j].c});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].c - b[j].c) : Rational(a[i].c + b[j].c);
      if (c != 0) out.push_back({a[i].e, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly(vars_);
  Poly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(vars_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.vars());
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());
  if (detail::kronecker_worthwhile(a, b)) {
    if (a.integral() && b.integral()) return detail::kronecker_mul(a, b);
    Rational ca = a.content(), cb = b.content();
    return detail::kronecker_mul(a.scaled(1 / ca), b.scaled(1 / cb)).scaled(ca * cb);
  }
  return schoolbook(a, b);
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_vars(a.vars_, b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

Poly Poly::coefficient(std::size_t var, std::uint32_t k) const {
  Poly r(vars_);
  for (const auto& t : terms_)
    if (t.e[var] == k) {
      Term u = t;
      u.e[var] = 0;
      r.terms_.push_back(std::move(u));
    }
  return r;
}

Poly Poly::rebase(VarTablePtr target) const {
  if (same_vars(vars_, target)) {
    Poly r = *this;
    r.vars_ = target;
    return r;
  }
  std::vector<std::size_t> map(nvars());
  Exponents used = degrees();
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto j = target->index(vars_->name(i));
    if (!j) {
      if (used[i]) throw ArithmeticError("variable " + vars_->name(i) + " missing from target table");
      map[i] = SIZE_MAX;
    } else {
      map[i] = *j;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target->size(), 0);
    for (std::size_t i = 0; i < nvars(); ++i)
      if (map[i] != SIZE_MAX) e[map[i]] = t.e[i];
    out.push_back({std::move(e), t.c});
  }
  return from_terms(std::move(target), std::move(out));
}

void Poly::write(std::ostream& os) const {
  if (terms_.empty()) {
    os << "0";
    return;
  }
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.c < 0;
    Rational a = abs(t.c);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool has_mono = false;
    for (auto x : t.e) has_mono |= x != 0;
    if (!has_mono) {
      os << a.get_str();
      continue;
    }
    bool need_star = false;
    if (a != 1) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.e.size(); ++i) {
      if (!t.e[i]) continue;
      if (need_star) os << '*';
      os << vars_->name(i);
      if (t.e[i] > 1) os << '^' << t.e[i];
      need_star = true;
    }
  }
}

std::string Poly::to_string() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  p.write(os);
  return os;
}

Rational evaluate(const Poly& p, const std::vector<Rational>& point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("point dimension mismatch");
  Exponents deg = p.degrees();
  std::vector<std::vector<Rational>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    powers[i].resize(deg[i] + 1);
    powers[i][0] = 1;
    for (std::uint32_t k = 1; k <= deg[i]; ++k) powers[i][k] = powers[i][k - 1] * point[i];
  }
  Rational sum = 0, t;
  for (const auto& term : p.terms()) {
    t = term.c;
    for (std::size_t i = 0; i < term.e.size(); ++i)
      if (term.e[i]) t *= powers[i][term.e[i]];
    sum += t;
  }
  return sum;
}

Rational evaluate(const Poly& p, const std::map<std::string, Rational>& point) {
  std::vector<Rational> v(p.nvars());
  Exponents deg = p.degrees();
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    auto it = point.find(p.vars()->name(i));
    if (it != point.end())
      v[i] = it->second;
    else if (deg[i])
      throw std::invalid_argument("unbound variable " + p.vars()->name(i));
  }
  return evaluate(p, v);
}

namespace {

std::optional<Poly> recursive_divide(const Poly& a, const Poly& b) {
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  std::size_t v = b.nvars();
  while (v-- > 0)
    if (b.degree(v) > 0) break;
  const std::uint32_t db = b.degree(v);
  const Poly lcb = b.coefficient(v, db);
  Poly q(a.vars()), r = a;
  Exponents shift(a.nvars(), 0);
  while (!r.is_zero()) {
    std::uint32_t dr = r.degree(v);
    if (dr < db) return std::nullopt;
    auto t = recursive_divide(r.coefficient(v, dr), lcb);
    if (!t) return std::nullopt;
    shift[v] = dr - db;
    Poly step = t->shift_up(shift);
    q += step;
    r -= step * b;
  }
  return q;
}

}  // namespace

std::optional<Poly> divide_exact(const Poly& p, const Poly& d) {
  if (!same_vars(p.vars(), d.vars())) throw ArithmeticError("mismatched VarTable");
  if (d.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (p.is_zero()) return Poly(p.vars());
  if (d.is_constant()) return p.scaled(1 / d.constant_value());
  Exponents dp = p.degrees(), dd = d.degrees();
  for (std::size_t i = 0; i < dp.size(); ++i)
    if (dd[i] > dp[i] || d.min_degree(i) > p.min_degree(i)) return std::nullopt;
  Rational cp = p.content(), cd = d.content();
  Poly pp = p.scaled(1 / cp), dprim = d.scaled(1 / cd);
  Poly q(p.vars());
  switch (detail::kronecker_divexact(pp, dprim, q)) {
    case detail::DivOutcome::Quotient:
      return q.scaled(cp / cd);
    case detail::DivOutcome::NotDivisible:
      return std::nullopt;
    case detail::DivOutcome::Unsupported:
      break;
  }
  auto r = recursive_divide(pp, dprim);
  if (!r) return std::nullopt;
  return r->scaled(cp / cd);
}

bool poly_divides(const Poly& d, const Poly& p, Poly* quotient) {
  auto q = divide_exact(p, d);
  if (q && quotient) *quotient = *q;
  return q.has_value();
}

}  // namespace twistpoly
