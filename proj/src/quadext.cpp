#include "twistpoly/quadext.hpp"

#include <sstream>

namespace twistpoly {

namespace {

Radicand shared_radicand(const QuadExt& x, const QuadExt& y) {
  const Radicand& rx = x.radicand();
  const Radicand& ry = y.radicand();
  if (!rx) return ry;
  if (!ry || rx == ry) return rx;
  if (!(*rx == *ry)) throw RadicandMismatch();
  return rx;
}

}  // namespace

QuadExt::QuadExt(RatFunc a) : a_(std::move(a)), b_(RatFunc(Poly(a_.vars()))) {}

QuadExt::QuadExt(RatFunc a, RatFunc b, Radicand r) : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)) {
  if (!same_vars(a_.vars(), b_.vars())) throw ArithmeticError("mismatched VarTable");
  if (!b_.is_zero()) {
    if (!r_) throw ArithmeticError("radical part without a radicand");
    if (r_->is_zero()) throw ArithmeticError("zero radicand");
  }
}

QuadExt QuadExt::sqrt_of(Radicand r) {
  if (!r) throw ArithmeticError("null radicand");
  const VarTablePtr& v = r->vars();
  return QuadExt(RatFunc(Poly(v)), RatFunc::constant(v, 1), std::move(r));
}

QuadExt QuadExt::conjugate() const { return QuadExt(a_, -b_, r_); }

RatFunc QuadExt::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ - b_ * b_ * *r_;
}

RatFunc conj_product(const QuadExt& x) { return x.norm(); }

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, r_); }

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  Radicand r = shared_radicand(x, y);
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_, r);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  Radicand r = shared_radicand(x, y);
  return QuadExt(x.a_ - y.a_, x.b_ - y.b_, r);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  Radicand r = shared_radicand(x, y);
  if (x.is_rational()) return QuadExt(x.a_ * y.a_, x.a_ * y.b_, r);
  if (y.is_rational()) return QuadExt(x.a_ * y.a_, x.b_ * y.a_, r);
  RatFunc a = x.a_ * y.a_ + x.b_ * y.b_ * *r;
  RatFunc b = x.a_ * y.b_ + x.b_ * y.a_;
  return QuadExt(std::move(a), std::move(b), r);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  Radicand r = shared_radicand(x, y);
  if (y.is_rational()) {
    if (y.a_.is_zero()) throw ArithmeticError("division by zero-norm element");
    return QuadExt(x.a_ / y.a_, x.b_ / y.a_, r);
  }
  RatFunc n = y.norm();
  if (n.is_zero()) throw ArithmeticError("division by zero-norm element");
  QuadExt num = x * y.conjugate();
  return QuadExt(num.a_ / n, num.b_ / n, r);
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  shared_radicand(x, y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

void QuadExt::write(std::ostream& os) const {
  a_.write(os);
  os << " + ";
  b_.write(os);
  os << "*sqrt(";
  if (r_)
    r_->write(os);
  else
    os << "0";
  os << ')';
}

std::string QuadExt::to_string() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  x.write(os);
  return os;
}

bool is_zero(const QuadExt& x) { return x.is_zero(); }
QuadExt one_like(const QuadExt& x) { return QuadExt(RatFunc::constant(x.vars(), 1)); }

}  // namespace twistpoly
