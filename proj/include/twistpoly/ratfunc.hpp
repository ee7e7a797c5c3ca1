#pragma once

#include "twistpoly/poly.hpp"

namespace twistpoly {

// Full: numerator and denominator are coprime (multivariate gcd).
// Content: only integer content and common monomial factors are removed.
enum class NormMode { Full, Content };

NormMode norm_mode();

class NormModeGuard {
 public:
  explicit NormModeGuard(NormMode m);
  ~NormModeGuard();
  NormModeGuard(const NormModeGuard&) = delete;
  NormModeGuard& operator=(const NormModeGuard&) = delete;

 private:
  NormMode saved_;
};

// Quotient num/den with integer coefficients, no common integer content or
// monomial factor, and a positive leading coefficient in the denominator.
class RatFunc {
 public:
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc constant(VarTablePtr vars, const Rational& c);
  static RatFunc variable(VarTablePtr vars, std::string_view name);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const VarTablePtr& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Rational constant_value() const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int k) const;
  RatFunc normalized() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  // Semantic equality by cross-multiplication.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;
  void write(std::ostream& os) const;

  friend RatFunc substitute_basis(const RatFunc& f, int sign, long e);

 private:
  Poly num_, den_;
  struct Raw {};
  RatFunc(Poly num, Poly den, Raw);
  void normalize();
  void normalize_content();
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

bool is_zero(const RatFunc& f);
RatFunc one_like(const RatFunc& f);

Rational evaluate(const RatFunc& f, const std::vector<Rational>& point);
Rational evaluate(const RatFunc& f, const std::map<std::string, Rational>& point);

// L -> sign * L * M^e, with negative powers of M cleared into the denominator.
RatFunc substitute_basis(const RatFunc& f, int sign, long e);

}  // namespace twistpoly
