#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistpoly {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
inline bool is_zero(const Rational& x) { return x == 0; }
inline Rational one_like(const Rational&) { return 1; }

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by evaluate() when a denominator is zero at the sample point, so
// callers can pick another point instead of treating it as a failure.
class DenominatorVanishes : public ArithmeticError {
 public:
  DenominatorVanishes() : ArithmeticError("denominator vanishes at evaluation point") {}
};

class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);
bool same_vars(const VarTablePtr& a, const VarTablePtr& b);

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents e;
  Rational c;
};

// Sparse polynomial with rational coefficients. Terms are kept sorted in
// descending lexicographic order of the exponent vector (variable order is
// the VarTable order), with no zero coefficients.
class Poly {
 public:
  explicit Poly(VarTablePtr vars);

  static Poly constant(VarTablePtr vars, const Rational& c);
  static Poly variable(VarTablePtr vars, std::size_t index, std::uint32_t power = 1);
  static Poly variable(VarTablePtr vars, std::string_view name, std::uint32_t power = 1);
  static Poly monomial(VarTablePtr vars, Exponents e, const Rational& c);
  // Accepts terms in any order, possibly with repeated exponents or zeros.
  static Poly from_terms(VarTablePtr vars, std::vector<Term> terms);
  // Caller guarantees sorted, distinct, nonzero.
  static Poly from_sorted(VarTablePtr vars, std::vector<Term> terms);

  const VarTablePtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  Rational constant_value() const;
  const Term& leading() const;

  std::uint32_t degree(std::size_t var) const;
  std::uint32_t min_degree(std::size_t var) const;
  std::uint32_t total_degree() const;
  Exponents degrees() const;
  bool integral() const;
  Integer max_abs_numerator() const;

  // Positive rational c such that *this / c has coprime integer coefficients;
  // the sign is that of the leading coefficient.
  Rational content() const;
  Poly primitive() const;
  Exponents monomial_content() const;
  Poly shift_down(const Exponents& e) const;
  Poly shift_up(const Exponents& e) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly scaled(const Rational& c) const;
  Poly pow(unsigned k) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  // Coefficient of var^k, as a polynomial in the remaining variables.
  Poly coefficient(std::size_t var, std::uint32_t k) const;
  // Re-express over another table containing every variable used here.
  Poly rebase(VarTablePtr target) const;

  std::string to_string() const;
  void write(std::ostream& os) const;

 private:
  VarTablePtr vars_;
  std::vector<Term> terms_;

  void check_compatible(const Poly& o) const;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly operator*(const Poly& a, const Poly& b);

Rational evaluate(const Poly& p, const std::vector<Rational>& point);
Rational evaluate(const Poly& p, const std::map<std::string, Rational>& point);

// Exact quotient p / d when d divides p over Q.
std::optional<Poly> divide_exact(const Poly& p, const Poly& d);
bool poly_divides(const Poly& d, const Poly& p, Poly* quotient = nullptr);

struct GcdResult {
  Poly g;
  Poly a_over_g;
  Poly b_over_g;
};

// Greatest common divisor over Q, returned primitive over Z with a positive
// leading coefficient (gcd(0, 0) = 0).
Poly poly_gcd(const Poly& a, const Poly& b);
GcdResult poly_gcd_cofactors(const Poly& a, const Poly& b);

}  // namespace twistpoly
