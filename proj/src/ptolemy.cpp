#include "twistpoly/ptolemy.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "twistpoly/data_pretzel238.hpp"
#include "twistpoly/data_whitehead.hpp"
#include "twistpoly/parse.hpp"

namespace twistpoly {

const VarTablePtr& lm_vars() {
  static const VarTablePtr v = make_vars({"L", "M"});
  return v;
}

std::vector<std::string> PtolemyEq::variables() const {
  std::set<std::string> s;
  for (const auto& t : terms) s.insert(t.gammas.begin(), t.gammas.end());
  return {s.begin(), s.end()};
}

Poly PtolemyEq::as_poly(const VarTablePtr& vars) const {
  Poly out(vars);
  for (const auto& t : terms) {
    Poly m = t.coef.rebase(vars);
    for (const auto& g : t.gammas) m *= Poly::variable(vars, g);
    out += m;
  }
  return out;
}

namespace {

VarTablePtr table_for(std::vector<std::string> gammas) {
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
  std::vector<std::string> names{"L", "M"};
  names.insert(names.end(), gammas.begin(), gammas.end());
  return make_vars(std::move(names));
}

}  // namespace

std::string PtolemyEq::to_string() const {
  return "[" + label + "] " + as_poly(table_for(variables())).to_string() + " = 0";
}

PtolemyEq parse_equation(std::string_view line) {
  static const std::regex re(R"(^\s*\[([^\]]+)\]\s*(.*\S)\s*=\s*0\s*$)");
  std::string s(line);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("equation must read '[label] expr = 0': " + s);
  PtolemyEq eq;
  eq.label = m[1];
  const std::string expr = m[2];
  std::vector<std::string> gammas;
  for (const auto& id : scan_identifiers(expr)) {
    if (id.rfind("g_", 0) == 0)
      gammas.push_back(id);
    else if (id != "L" && id != "M")
      throw ParseError("unknown symbol '" + id + "' in " + eq.label);
  }
  VarTablePtr vars = table_for(gammas);
  Poly p = parse_poly(expr, vars);
  std::map<std::vector<std::string>, std::vector<Term>> grouped;
  for (const auto& t : p.terms()) {
    std::vector<std::string> key;
    for (std::size_t i = 2; i < vars->size(); ++i)
      for (std::uint32_t k = 0; k < t.e[i]; ++k) key.push_back(vars->name(i));
    if (key.size() != 2) throw ParseError(eq.label + ": every term must have gamma-degree 2");
    grouped[key].push_back({Exponents{t.e[0], t.e[1]}, t.c});
  }
  for (auto& [key, ts] : grouped) eq.terms.push_back({Poly::from_terms(lm_vars(), std::move(ts)), key});
  return eq;
}

std::vector<PtolemyEq> parse_equations(std::string_view text) {
  std::vector<PtolemyEq> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    out.push_back(parse_equation(line));
  }
  return out;
}

const PtolemyEq& find_equation(const std::vector<PtolemyEq>& eqs, std::string_view label) {
  for (const auto& e : eqs)
    if (e.label == label) return e;
  throw PipelineError("no equation labelled " + std::string(label));
}

const std::vector<PtolemyEq>& pretzel_equations() {
  static const std::vector<PtolemyEq> eqs = parse_equations(data::pretzel238);
  return eqs;
}

const std::vector<PtolemyEq>& whitehead_equations() {
  static const std::vector<PtolemyEq> eqs = parse_equations(data::whitehead);
  return eqs;
}

namespace {

PtolemyEq step_form(const StepLabels& s, int sq_sign, std::string label) {
  const Poly one = Poly::constant(lm_vars(), 1);
  PtolemyEq eq;
  eq.label = std::move(label);
  auto pair = [](std::string a, std::string b) {
    std::vector<std::string> v{std::move(a), std::move(b)};
    std::sort(v.begin(), v.end());
    return v;
  };
  eq.terms.push_back({one, pair(s.o.var(), s.h.var())});
  eq.terms.push_back({one.scaled(sq_sign), pair(s.p.var(), s.p.var())});
  eq.terms.push_back({one.scaled(-sq_sign), pair(s.f.var(), s.f.var())});
  return eq;
}

}  // namespace

PtolemyEq generated_step_equation(const StepLabels& s) { return step_form(s, 1, "step" + std::to_string(s.k)); }

PtolemyEq swapped_step_equation(const StepLabels& s) {
  return step_form(s, -1, "step" + std::to_string(s.k) + "swap");
}

const char* to_string(EqRelation r) {
  switch (r) {
    case EqRelation::Identical:
      return "identical";
    case EqRelation::Negated:
      return "negated";
    case EqRelation::PivotFanSwapped:
      return "pivot/fan swapped";
    case EqRelation::Different:
      break;
  }
  return "different";
}

EqRelation classify(const PtolemyEq& fixture, const StepLabels& s) {
  PtolemyEq g = step_form(s, 1, "gen");
  PtolemyEq sw = step_form(s, -1, "swap");
  std::vector<std::string> names = fixture.variables();
  for (const auto& n : g.variables()) names.push_back(n);
  VarTablePtr vars = table_for(names);
  Poly f = fixture.as_poly(vars), gp = g.as_poly(vars), sp = sw.as_poly(vars);
  if (f == gp) return EqRelation::Identical;
  if (f == -gp) return EqRelation::Negated;
  if (f == sp || f == -sp) return EqRelation::PivotFanSwapped;
  return EqRelation::Different;
}

Assignment<RatFunc> solve_pretzel_base() {
  const auto& eqs = pretzel_equations();
  const PtolemyEq& tet0 = find_equation(eqs, "tet0");
  const PtolemyEq& tet1 = find_equation(eqs, "tet1");
  Assignment<RatFunc> asg;
  asg.emplace("g_3/1", RatFunc::constant(lm_vars(), 1));
  // Linear in gamma_{1/0} gamma_{4/1} and gamma_{4/1}.
  auto [prod, g41] = solve_monomial_system(tet0, tet1, {"g_1/0", "g_4/1"}, {"g_4/1"}, asg, RatFuncLift{});
  if (g41.is_zero()) throw PipelineError("pretzel base: gamma_{4/1} vanishes");
  asg.emplace("g_4/1", g41);
  asg.emplace("g_1/0", prod / g41);
  if (!check_equation(tet0, asg, RatFuncLift{}) || !check_equation(tet1, asg, RatFuncLift{}))
    throw PipelineError("pretzel base fails back-substitution");
  return asg;
}

WhiteheadBase solve_whitehead_base(int branch) {
  if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
  const auto& eqs = whitehead_equations();
  const PtolemyEq& e1 = find_equation(eqs, "1WH");
  const PtolemyEq& e2 = find_equation(eqs, "2WH");
  const PtolemyEq& e3 = find_equation(eqs, "3WH");
  Assignment<RatFunc> rasg;
  rasg.emplace("g_1/0", RatFunc::constant(lm_vars(), 1));
  auto [u, g31] = solve_monomial_system(e1, e2, {"g_0(23)", "g_2/1"}, {"g_3/1"}, rasg, RatFuncLift{});
  RatFunc r = RatFunc::constant(lm_vars(), 1) - g31;
  if (r.is_zero()) throw PipelineError("whitehead base: radicand vanishes");
  WhiteheadBase out;
  out.radicand = std::make_shared<const RatFunc>(r);
  QuadExt g023(RatFunc(Poly(lm_vars())), RatFunc::constant(lm_vars(), branch), out.radicand);
  out.values.emplace("g_1/0", QuadExt(RatFunc::constant(lm_vars(), 1)));
  out.values.emplace("g_3/1", QuadExt(g31));
  out.values.emplace("g_0(23)", g023);
  out.values.emplace("g_2/1", QuadExt(u) / g023);
  for (const auto* e : {&e1, &e2, &e3})
    if (!check_equation(*e, out.values, QuadLift{})) throw PipelineError("whitehead base fails " + e->label);
  return out;
}

}  // namespace twistpoly
