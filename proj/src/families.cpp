#include "twistpoly/families.hpp"

#include <mutex>
#include <stdexcept>

#include "twistpoly/data_closed_forms.hpp"
#include "twistpoly/hn.hpp"
#include "twistpoly/parse.hpp"

namespace twistpoly {

Family parse_family(std::string_view s) {
  if (s == "pretzel238" || s == "pretzel") return Family::Pretzel238;
  if (s == "whitehead" || s == "twist") return Family::Whitehead;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

Sign parse_sign(std::string_view s) {
  if (s == "pos" || s == "positive" || s == "+") return Sign::Positive;
  if (s == "neg" || s == "negative" || s == "-") return Sign::Negative;
  throw std::invalid_argument("unknown sign '" + std::string(s) + "'");
}

const char* to_string(Family f) { return f == Family::Pretzel238 ? "pretzel238" : "whitehead"; }
const char* to_string(Sign s) { return s == Sign::Positive ? "pos" : "neg"; }

std::string FamilySpec::word(int m) const {
  if (m < 1) throw std::invalid_argument("tail length m must be >= 1");
  return body + std::string(static_cast<std::size_t>(m) + 1, tail_letter);
}

Walk FamilySpec::walk(int m) const { return Walk::parse("triangle=" + triangle + ";word=" + word(m)); }

std::string FamilySpec::knot_name(int m) const {
  if (family == Family::Pretzel238) {
    if (sign == Sign::Positive) return "T(5," + std::to_string(-5 * m - 14) + ",2,2)";
    return "T(5," + std::to_string(5 * m + 11) + ",2,2)";
  }
  if (sign == Sign::Positive) return "J(2," + std::to_string(2 * m + 6) + ")";
  return "J(2," + std::to_string(-2 * m - 4) + ")";
}

std::string FamilySpec::filling_slope(int m) const {
  if (sign == Sign::Positive) return "1/" + std::to_string(m + 3);
  return "-1/" + std::to_string(m + 2);
}

namespace {

FamilySpec make_spec(Family fam, Sign sign) {
  FamilySpec s;
  s.family = fam;
  s.sign = sign;
  const bool pos = sign == Sign::Positive;
  if (fam == Family::Pretzel238) {
    s.triangle = "3/1,4/1,1/0";
    s.body = pos ? "LLR" : "LLL";
    s.tail_letter = pos ? 'L' : 'R';
    s.step_labels = {"step0", "step1", "step2", pos ? "step3pos" : "step3neg"};
    s.base_labels = {"tet0", "tet1"};
    s.tail_start_step = 4;
    s.basis_sign = 1;
    // 8 - 25(m+3) and 8 + 25(m+2)
    s.basis_offset = pos ? -67 : 58;
    s.basis_slope = pos ? -25 : 25;
  } else {
    s.triangle = "2/1,3/1,1/0";
    s.body = pos ? "LR" : "LL";
    s.tail_letter = pos ? 'L' : 'R';
    s.step_labels = {"4WH", "5WH", pos ? "step2pos" : "step2neg"};
    s.base_labels = {"1WH", "2WH", "3WH"};
    s.tail_start_step = 3;
    s.basis_sign = -1;
    s.basis_offset = -2;
    s.basis_slope = 0;
  }
  if (pos) {
    s.f = Slope(1, 2);
    s.o = Slope(1, 1);
    s.p = Slope(0, 1);
  } else {
    s.f = Slope(-1, 1);
    s.o = Slope(1, 0);
    s.p = Slope(0, 1);
  }
  return s;
}

std::vector<const PtolemyEq*> step_fixtures(const FamilySpec& spec) {
  const auto& eqs = spec.family == Family::Pretzel238 ? pretzel_equations() : whitehead_equations();
  std::vector<const PtolemyEq*> out;
  for (const auto& l : spec.step_labels) out.push_back(&find_equation(eqs, l));
  return out;
}

void check_tail_slopes(const FamilySpec& spec, const std::vector<StepLabels>& labels) {
  const StepLabels& t = labels.at(spec.tail_start_step);
  if (!(t.f == spec.f) || !(t.o == spec.o) || !(t.p == spec.p))
    throw PipelineError("walk tail slopes disagree with the family specification");
}

}  // namespace

const FamilySpec& family_spec(Family f, Sign s) {
  static const FamilySpec specs[2][2] = {
      {make_spec(Family::Pretzel238, Sign::Positive), make_spec(Family::Pretzel238, Sign::Negative)},
      {make_spec(Family::Whitehead, Sign::Positive), make_spec(Family::Whitehead, Sign::Negative)}};
  return specs[f == Family::Whitehead][s == Sign::Negative];
}

PretzelChain solve_pretzel_chain(Sign s) {
  const FamilySpec& spec = family_spec(Family::Pretzel238, s);
  auto labels = walk_labels(spec.walk(1));
  check_tail_slopes(spec, labels);
  PretzelChain c;
  c.values = chain_solve(labels, step_fixtures(spec), solve_pretzel_base(), spec.branch_step(), RatFuncLift{},
                         &c.steps);
  return c;
}

WhiteheadChain solve_whitehead_chain(Sign s, int branch) {
  const FamilySpec& spec = family_spec(Family::Whitehead, s);
  auto labels = walk_labels(spec.walk(1));
  check_tail_slopes(spec, labels);
  WhiteheadBase base = solve_whitehead_base(branch);
  WhiteheadChain c;
  c.radicand = base.radicand;
  c.values = chain_solve(labels, step_fixtures(spec), std::move(base.values), spec.branch_step(), QuadLift{},
                         &c.steps);
  return c;
}

namespace {
std::mutex cache_mutex;
}

const PretzelChain& pretzel_chain(Sign s) {
  static std::optional<PretzelChain> cache[2];
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = cache[s == Sign::Negative];
  if (!slot) {
    NormModeGuard g(NormMode::Full);
    slot = solve_pretzel_chain(s);
  }
  return *slot;
}

const WhiteheadChain& whitehead_chain(Sign s) {
  static std::optional<WhiteheadChain> cache[2];
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = cache[s == Sign::Negative];
  if (!slot) {
    NormModeGuard g(NormMode::Full);
    slot = solve_whitehead_chain(s);
  }
  return *slot;
}

bool whitehead_structure_ok(const WhiteheadChain& c) {
  for (const auto& [name, v] : c.values)
    if (!v.is_rational() && !v.is_pure_radical()) return false;
  return true;
}

FillingResult run_family(const FamilySpec& spec, int m, bool with_basis_change) {
  if (m < 1) throw std::invalid_argument("tail length m must be >= 1");
  const bool tip_ok = anatomy(spec.word(m)).tip_matches_tail;
  FillingResult r{spec.family, spec.sign, m, spec.knot_name(m), spec.filling_slope(m), std::nullopt, std::nullopt,
                  RatFunc(Poly(lm_vars())), std::nullopt};
  if (spec.family == Family::Pretzel238) {
    const auto& v = pretzel_chain(spec.sign).values;
    TailContext<RatFunc> ctx{lookup(v, spec.f.var()), lookup(v, spec.o.var()), lookup(v, spec.p.var()), m};
    r.rational = filling_poly(ctx, tip_ok);
    r.conjugate_product = *r.rational;
  } else {
    const WhiteheadChain& c = whitehead_chain(spec.sign);
    if (!whitehead_structure_ok(c)) throw PipelineError("whitehead values mix rational and radical parts");
    TailContext<QuadExt> ctx{lookup(c.values, spec.f.var()), lookup(c.values, spec.o.var()),
                             lookup(c.values, spec.p.var()), m};
    r.radical = filling_poly(ctx, tip_ok);
    r.conjugate_product = conj_product(*r.radical);
  }
  if (with_basis_change) r.basis_changed = basis_change(r, spec);
  return r;
}

RatFunc basis_change(const FillingResult& r, const FamilySpec& spec) {
  return substitute_basis(r.conjugate_product, spec.basis_sign, spec.basis_exponent(r.m));
}

const TwistPolys& twist_xyz() {
  static const TwistPolys t{
      parse_poly("-L + L^2 + 2*L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + 2*L*M^6 + M^8 - L*M^8", lm_vars()),
      parse_poly("M^4*(L+M^2)^4", lm_vars()),
      parse_poly("L*(M^2-1)^3*(M^2+1)^2*(L-M^4)", lm_vars())};
  return t;
}

Poly twist_A(int n, Sign s) {
  const TwistPolys& t = twist_xyz();
  Poly a(lm_vars()), b(lm_vars());
  int k;
  if (s == Sign::Positive) {
    if (n < 1) throw std::invalid_argument("positive twist chain starts at n = 1");
    a = parse_poly("L + M^6", lm_vars());
    b = parse_poly(
        "-L^2 + L^3 + 2*L^2*M^2 + L*M^4 + 2*L^2*M^4 - L*M^6 - L^2*M^8 + 2*L*M^10 + L^2*M^10 + 2*L*M^12 + M^14 - "
        "L*M^14",
        lm_vars());
    k = 1;
  } else {
    if (n < 0) throw std::invalid_argument("negative twist chain starts at n = 0");
    a = Poly::constant(lm_vars(), 1);
    b = parse_poly("-L + L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + L*M^6 - L*M^8", lm_vars());
    k = 0;
  }
  if (n == k) return a;
  for (int i = k + 2; i <= n; ++i) {
    Poly c = t.x * b - t.y * a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

bool twist_recurrence_check(int n, Sign s, bool negate_z) {
  const TwistPolys& t = twist_xyz();
  Poly z = negate_z ? -t.z : t.z;
  Poly extra(lm_vars());
  if (s == Sign::Positive) {
    if (n < 2) throw std::invalid_argument("positive recurrence needs n > 1");
    extra = t.y.pow(n - 2) * z * parse_poly("M^4*(L+M^2)^3", lm_vars());
  } else {
    if (n < 1) throw std::invalid_argument("negative recurrence needs n > 0");
    extra = t.y.pow(n - 1) * z * parse_poly("L+M^2", lm_vars());
  }
  Poly an = twist_A(n, s);
  return twist_A(n - 1, s) * twist_A(n + 1, s) == an * an + extra;
}

Poly twist_base_identity_lhs(Sign s) {
  const TwistPolys& t = twist_xyz();
  const int k = s == Sign::Positive ? 1 : 0;
  Poly a = twist_A(k, s), b = twist_A(k + 1, s);
  return t.x * a * b - t.y * a * a - b * b;
}

Poly twist_base_identity_rhs(Sign s) {
  const TwistPolys& t = twist_xyz();
  if (s == Sign::Positive) return t.z * parse_poly("M^4*(L+M^2)^3", lm_vars());
  return t.z * parse_poly("L+M^2", lm_vars());
}

bool twist_divides(const FillingResult& r) {
  if (r.family != Family::Whitehead) throw std::invalid_argument("divisibility check applies to twist knots");
  const RatFunc bc = r.basis_changed ? *r.basis_changed : basis_change(r, family_spec(r.family, r.sign));
  const int n = r.sign == Sign::Positive ? r.m + 3 : r.m + 2;
  return poly_divides(twist_A(n, r.sign), bc.num());
}

namespace {

Rational solve_for(const PtolemyEq& eq, const std::string& unknown, Assignment<Rational>& asg, const PointLift& lift) {
  Rational v = solve_linear_step(eq, unknown, asg, lift);
  asg[unknown] = v;
  return v;
}

}  // namespace

Rational numeric_pretzel_filling(Sign s, int m, const Rational& L, const Rational& M) {
  if (m < 1) throw std::invalid_argument("tail length m must be >= 1");
  const PointLift lift{{L, M}};
  // tet1 after eliminating gamma_{4/1} = L/(M gamma_{1/0} - M^2) is linear in
  // gamma_{1/0}: (L^2 M - M^3) gamma_{1/0} = L^2 - M^4.
  Rational a = L * L * M - M * M * M;
  if (a == 0) throw DenominatorVanishes();
  Rational g10 = (L * L - M * M * M * M) / a;
  Rational piv = M * g10 - M * M;
  if (piv == 0) throw DenominatorVanishes();
  Assignment<Rational> asg{{"g_3/1", Rational(1)}, {"g_1/0", g10}, {"g_4/1", L / piv}};
  const auto& eqs = pretzel_equations();
  for (const char* label : {"tet0", "tet1"})
    if (!check_equation(find_equation(eqs, label), asg, lift)) throw PipelineError("numeric base inconsistent");
  solve_for(find_equation(eqs, "step0"), "g_2/1", asg, lift);
  solve_for(find_equation(eqs, "step1"), "g_1/1", asg, lift);
  solve_for(find_equation(eqs, "step2"), "g_0/1", asg, lift);
  Rational f, o, p;
  if (s == Sign::Positive) {
    f = solve_for(find_equation(eqs, "step3pos"), "g_1/2", asg, lift);
    o = asg.at("g_1/1");
  } else {
    f = solve_for(find_equation(eqs, "step3neg"), "g_-1/1", asg, lift);
    o = asg.at("g_1/0");
  }
  p = asg.at("g_0/1");
  // filling = f^(m-1) o^m (h_last - p) where h_last ends the tail.
  Rational scale = 1;
  for (int i = 0; i < m - 1; ++i) scale *= f;
  for (int i = 0; i < m; ++i) scale *= o;
  Rational cf = f, co = o, h;
  for (int k = 0; k < m; ++k) {
    if (co == 0) throw DenominatorVanishes();
    h = (cf * cf - p * p) / co;
    co = cf;
    cf = h;
  }
  return scale * (h - p);
}

namespace {

struct ClosedFormLine {
  std::string family, key, expr;
};

const std::vector<ClosedFormLine>& closed_form_lines() {
  static const std::vector<ClosedFormLine> lines = [] {
    std::vector<ClosedFormLine> out;
    std::string_view text = data::closed_forms;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      start = end + 1;
      if (line.empty() || line[0] == '#') continue;
      auto a = line.find(' '), b = line.find(' ', a + 1);
      if (a == std::string::npos || b == std::string::npos) throw ParseError("bad closed-form line: " + line);
      out.push_back({line.substr(0, a), line.substr(a + 1, b - a - 1), line.substr(b + 1)});
    }
    return out;
  }();
  return lines;
}

}  // namespace

RatFunc closed_form(std::string_view family, std::string_view key) {
  for (const auto& l : closed_form_lines())
    if (l.family == family && l.key == key) return parse_ratfunc(l.expr, lm_vars());
  throw std::invalid_argument("no closed form for " + std::string(family) + " " + std::string(key));
}

std::vector<std::string> closed_form_keys(std::string_view family) {
  std::vector<std::string> out;
  for (const auto& l : closed_form_lines())
    if (l.family == family) out.push_back(l.key);
  return out;
}

Rational random_rational(std::mt19937_64& rng, int nmax, int dmax) {
  std::uniform_int_distribution<int> num(-nmax, nmax), den(1, dmax);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace twistpoly
