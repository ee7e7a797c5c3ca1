#pragma once

#include <memory>

#include "twistpoly/ratfunc.hpp"

namespace twistpoly {

class RadicandMismatch : public ArithmeticError {
 public:
  RadicandMismatch() : ArithmeticError("quadratic extension radicand mismatch") {}
};

using Radicand = std::shared_ptr<const RatFunc>;

// a + b*sqrt(R). Elements with b = 0 may carry no radicand; they combine with
// any extension element.
class QuadExt {
 public:
  explicit QuadExt(RatFunc a);
  QuadExt(RatFunc a, RatFunc b, Radicand r);

  static QuadExt sqrt_of(Radicand r);

  const RatFunc& a() const { return a_; }
  const RatFunc& b() const { return b_; }
  const Radicand& radicand() const { return r_; }
  const VarTablePtr& vars() const { return a_.vars(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  bool is_pure_radical() const { return a_.is_zero() && !b_.is_zero(); }

  QuadExt conjugate() const;
  // a^2 - b^2 R
  RatFunc norm() const;

  QuadExt operator-() const;
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  friend bool operator==(const QuadExt& x, const QuadExt& y);

  std::string to_string() const;
  void write(std::ostream& os) const;

 private:
  RatFunc a_, b_;
  Radicand r_;
};

RatFunc conj_product(const QuadExt& x);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

bool is_zero(const QuadExt& x);
QuadExt one_like(const QuadExt& x);

}  // namespace twistpoly
