#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twistpoly/farey.hpp"
#include "twistpoly/ptolemy.hpp"

namespace twistpoly {

enum class Family { Pretzel238, Whitehead };
enum class Sign { Positive, Negative };

Family parse_family(std::string_view s);
Sign parse_sign(std::string_view s);
const char* to_string(Family f);
const char* to_string(Sign s);

struct FamilySpec {
  Family family;
  Sign sign;
  std::string triangle;                  // walk triangle, o0 in the middle
  std::string body;                      // word letters before the tail
  char tail_letter;
  std::vector<std::string> step_labels;  // fixture label per step 0..branch step
  std::vector<std::string> base_labels;
  Slope f, o, p;                         // tail slopes
  int tail_start_step;
  int basis_sign;
  long basis_offset, basis_slope;        // exponent = offset + slope * m

  std::string word(int m) const;
  Walk walk(int m) const;
  long basis_exponent(int m) const { return basis_offset + basis_slope * m; }
  std::string knot_name(int m) const;
  std::string filling_slope(int m) const;
  int branch_step() const { return static_cast<int>(step_labels.size()) - 1; }
};

const FamilySpec& family_spec(Family f, Sign s);

struct PretzelChain {
  Assignment<RatFunc> values;
  std::vector<StepReport> steps;
};

struct WhiteheadChain {
  Radicand radicand;
  Assignment<QuadExt> values;
  std::vector<StepReport> steps;
};

// Base solve followed by the chain through the branch step. The cached
// versions are computed once per sign.
PretzelChain solve_pretzel_chain(Sign s);
WhiteheadChain solve_whitehead_chain(Sign s, int branch = kWhiteheadBranch);
const PretzelChain& pretzel_chain(Sign s);
const WhiteheadChain& whitehead_chain(Sign s);

// Every Whitehead value is rational or a rational multiple of sqrt(R).
bool whitehead_structure_ok(const WhiteheadChain& c);

struct FillingResult {
  Family family;
  Sign sign;
  int m;
  std::string knot;
  std::string slope;
  std::optional<RatFunc> rational;  // pretzel
  std::optional<QuadExt> radical;   // whitehead
  RatFunc conjugate_product;        // a^2 - b^2 R, or the rational expression itself
  std::optional<RatFunc> basis_changed;
};

FillingResult run_family(const FamilySpec& spec, int m, bool with_basis_change = true);
RatFunc basis_change(const FillingResult& r, const FamilySpec& spec);

struct TwistPolys {
  Poly x, y, z;
};
const TwistPolys& twist_xyz();
// Positive chain from A_1, A_2; negative chain from A_0 = 1, A_1.
Poly twist_A(int n, Sign s);
bool twist_recurrence_check(int n, Sign s, bool negate_z = false);
// Left side of the recurrence at its lowest index, and the expected value.
Poly twist_base_identity_lhs(Sign s);
Poly twist_base_identity_rhs(Sign s);

// twist_A of the matching knot divides the numerator of the basis-changed
// conjugate product. Twist knots only.
bool twist_divides(const FillingResult& r);

// Pretzel filling value at (L, M) from exact rational arithmetic only:
// base elimination, step equations, then m exchange steps along the tail.
Rational numeric_pretzel_filling(Sign s, int m, const Rational& L, const Rational& M);

// Closed forms shipped with the library: family "pretzel238" or
// "whitehead", key a slope such as "1/0" (or "0/1:coef", "0/1:radicand").
RatFunc closed_form(std::string_view family, std::string_view key);
std::vector<std::string> closed_form_keys(std::string_view family);

// Random rational with numerator in [-nmax, nmax] and denominator in [1, dmax].
Rational random_rational(std::mt19937_64& rng, int nmax = 40, int dmax = 12);

}  // namespace twistpoly
