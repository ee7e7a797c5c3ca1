#pragma once

#include "twistpoly/poly.hpp"

namespace twistpoly::detail {

// Kronecker substitution: a polynomial with integer coefficients is packed
// into one big integer, slot by slot, so a product or an exact quotient is a
// single GMP operation.

bool kronecker_worthwhile(const Poly& a, const Poly& b);
Poly kronecker_mul(const Poly& a, const Poly& b);

enum class DivOutcome { Quotient, NotDivisible, Unsupported };
DivOutcome kronecker_divexact(const Poly& a, const Poly& b, Poly& quotient);

}  // namespace twistpoly::detail
