#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twistpoly/ratfunc.hpp"

namespace twistpoly {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Grammar: sums and products of integers, identifiers and parenthesised
// groups; '^' takes a (possibly negative) integer exponent; '/' divides.
// Identifiers are plain names (L, M) or slope variables g_p/q, g_f, g_0(23).
RatFunc parse_ratfunc(std::string_view text, const VarTablePtr& vars);
Poly parse_poly(std::string_view text, const VarTablePtr& vars);

// Identifiers in order of first appearance.
std::vector<std::string> scan_identifiers(std::string_view text);

}  // namespace twistpoly
