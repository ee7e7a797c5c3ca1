#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twistpoly/farey.hpp"
#include "twistpoly/quadext.hpp"
#include "twistpoly/ratfunc.hpp"

namespace twistpoly {

// Coefficient ring for equations and pipeline values.
const VarTablePtr& lm_vars();

struct PtolemyTerm {
  Poly coef;                        // over lm_vars()
  std::vector<std::string> gammas;  // sorted, with repetition
};

struct PtolemyEq {
  std::string label;
  std::vector<PtolemyTerm> terms;

  std::vector<std::string> variables() const;
  // The equation as one polynomial over L, M and its own gamma variables.
  Poly as_poly(const VarTablePtr& vars) const;
  std::string to_string() const;
};

class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "[label] expr = 0"
PtolemyEq parse_equation(std::string_view line);
// One equation per line; blank lines and '#' comments skipped.
std::vector<PtolemyEq> parse_equations(std::string_view text);
const PtolemyEq& find_equation(const std::vector<PtolemyEq>& eqs, std::string_view label);

const std::vector<PtolemyEq>& pretzel_equations();
const std::vector<PtolemyEq>& whitehead_equations();

// o*h + p^2 - f^2 for one walk step.
PtolemyEq generated_step_equation(const StepLabels& s);
// o*h + f^2 - p^2
PtolemyEq swapped_step_equation(const StepLabels& s);

enum class EqRelation { Identical, Negated, PivotFanSwapped, Different };
const char* to_string(EqRelation r);
// PivotFanSwapped covers +-(o*h + f^2 - p^2).
EqRelation classify(const PtolemyEq& fixture, const StepLabels& s);

template <class X>
using Assignment = std::map<std::string, X>;

struct RatFuncLift {
  RatFunc operator()(const Poly& c) const { return RatFunc(c); }
};
struct QuadLift {
  QuadExt operator()(const Poly& c) const { return QuadExt(RatFunc(c)); }
};
// Numeric pipeline: coefficients evaluated at (L, M).
struct PointLift {
  std::vector<Rational> point;
  Rational operator()(const Poly& c) const { return evaluate(c, point); }
};

template <class X>
const X& lookup(const Assignment<X>& asg, const std::string& name) {
  auto it = asg.find(name);
  if (it == asg.end()) throw PipelineError("unbound variable " + name);
  return it->second;
}

template <class X, class Lift>
X substitute(const PtolemyEq& eq, const Assignment<X>& asg, const Lift& lift) {
  X sum = lift(Poly(lm_vars()));
  for (const auto& t : eq.terms) {
    X v = lift(t.coef);
    for (const auto& g : t.gammas) v = v * lookup(asg, g);
    sum = sum + v;
  }
  return sum;
}

template <class X, class Lift>
bool check_equation(const PtolemyEq& eq, const Assignment<X>& asg, const Lift& lift) {
  return is_zero(substitute(eq, asg, lift));
}

// Value of `unknown` making eq vanish; eq must be linear in it.
template <class X, class Lift>
X solve_linear_step(const PtolemyEq& eq, const std::string& unknown, const Assignment<X>& asg, const Lift& lift) {
  X a = lift(Poly(lm_vars())), b = a;
  bool seen = false;
  for (const auto& t : eq.terms) {
    X v = lift(t.coef);
    int hits = 0;
    for (const auto& g : t.gammas) {
      if (g == unknown)
        ++hits;
      else
        v = v * lookup(asg, g);
    }
    if (hits > 1) throw PipelineError(eq.label + ": " + unknown + " appears quadratically");
    if (hits == 1) {
      a = a + v;
      seen = true;
    } else {
      b = b + v;
    }
  }
  if (!seen) throw PipelineError(eq.label + ": " + unknown + " does not appear");
  if (is_zero(a)) throw PipelineError(eq.label + ": coefficient of " + unknown + " vanishes");
  return -b / a;
}

// Solves two equations that are linear in two gamma monomials (each a sorted
// multiset of unbound variables); every other variable must be bound.
template <class X, class Lift>
std::pair<X, X> solve_monomial_system(const PtolemyEq& e1, const PtolemyEq& e2, const std::vector<std::string>& m1,
                                      const std::vector<std::string>& m2, const Assignment<X>& asg,
                                      const Lift& lift) {
  auto split = [&](const PtolemyEq& eq, X& c1, X& c2, X& c0) {
    c1 = c2 = c0 = lift(Poly(lm_vars()));
    for (const auto& t : eq.terms) {
      X v = lift(t.coef);
      std::vector<std::string> free;
      for (const auto& g : t.gammas) {
        auto it = asg.find(g);
        if (it == asg.end())
          free.push_back(g);
        else
          v = v * it->second;
      }
      if (free.empty())
        c0 = c0 + v;
      else if (free == m1)
        c1 = c1 + v;
      else if (free == m2)
        c2 = c2 + v;
      else
        throw PipelineError(eq.label + ": term not linear in the chosen monomials");
    }
  };
  X a1 = lift(Poly(lm_vars())), b1 = a1, c1 = a1, a2 = a1, b2 = a1, c2 = a1;
  split(e1, a1, b1, c1);
  split(e2, a2, b2, c2);
  X det = a1 * b2 - a2 * b1;
  if (is_zero(det)) throw PipelineError("degenerate elimination in " + e1.label + ", " + e2.label);
  X x = (b1 * c2 - b2 * c1) / det;
  X y = (a2 * c1 - a1 * c2) / det;
  return {x, y};
}

struct StepReport {
  int k;
  std::string label;
  std::string unknown;
  EqRelation relation;
  bool verified;
};

// Binds gamma_{h_k} for k = 0..upto in walk order. fixtures[k], when present
// and non-null, replaces the generated equation for step k.
template <class X, class Lift>
Assignment<X> chain_solve(const std::vector<StepLabels>& labels, const std::vector<const PtolemyEq*>& fixtures,
                          Assignment<X> asg, int upto, const Lift& lift, std::vector<StepReport>* reports = nullptr) {
  for (int k = 0; k <= upto && k < static_cast<int>(labels.size()); ++k) {
    const StepLabels& s = labels[k];
    const PtolemyEq* fixture = k < static_cast<int>(fixtures.size()) ? fixtures[k] : nullptr;
    PtolemyEq generated;
    if (!fixture) generated = generated_step_equation(s);
    const PtolemyEq& eq = fixture ? *fixture : generated;
    const std::string unknown = s.h.var();
    if (asg.count(unknown)) throw PipelineError("step " + std::to_string(k) + " target " + unknown + " already bound");
    X v = solve_linear_step(eq, unknown, asg, lift);
    asg.emplace(unknown, std::move(v));
    bool ok = check_equation(eq, asg, lift);
    if (!ok) throw PipelineError(eq.label + " fails back-substitution");
    if (reports)
      reports->push_back({k, eq.label, unknown, fixture ? classify(*fixture, s) : EqRelation::Identical, ok});
  }
  return asg;
}

// gamma_{3/1} = 1, then tet0/tet1 give gamma_{1/0} and gamma_{4/1}.
Assignment<RatFunc> solve_pretzel_base();

// sqrt(R) branch used for gamma_{0(23)}.
inline constexpr int kWhiteheadBranch = 1;

struct WhiteheadBase {
  Radicand radicand;  // 1 - gamma_{3/1}
  Assignment<QuadExt> values;
};

// gamma_{1/0} = 1, then 1WH-3WH give gamma_{3/1}, gamma_{0(23)}, gamma_{2/1}.
WhiteheadBase solve_whitehead_base(int branch = kWhiteheadBranch);

}  // namespace twistpoly
