#include "twistpoly/render.hpp"

namespace twistpoly {

Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back({{"coef", to_string(t.c)}, {"exps", t.e}});
  return {{"vars", p.vars()->names()}, {"terms", std::move(terms)}};
}

Json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const QuadExt& x) {
  Json j{{"a", to_json(x.a())}, {"b", to_json(x.b())}};
  j["radicand"] = x.radicand() ? to_json(*x.radicand()) : Json(nullptr);
  return j;
}

Json to_json(const Slope& s) { return s.to_string(); }

Json to_json(const StepLabels& s) {
  return {{"k", s.k}, {"direction", std::string(1, s.direction)}, {"o", to_json(s.o)},
          {"h", to_json(s.h)}, {"p", to_json(s.p)},                  {"f", to_json(s.f)}};
}

Json to_json(const WordAnatomy& a) {
  return {{"body", a.body},
          {"tail", a.tail},
          {"tip", std::string(1, a.tip)},
          {"tail_start_step", a.tail_start_step},
          {"tip_matches_tail", a.tip_matches_tail}};
}

Json to_json(const FillingResult& r) {
  Json j = envelope("apoly");
  j["family"] = to_string(r.family);
  j["sign"] = to_string(r.sign);
  j["m"] = r.m;
  j["slope"] = r.slope;
  j["knot"] = r.knot;
  if (r.rational)
    j["expression"] = to_json(*r.rational);
  else
    j["expression"] = to_json(*r.radical);
  j["conjugate_product"] = to_json(r.conjugate_product);
  j["basis_changed"] = r.basis_changed ? to_json(*r.basis_changed) : Json(nullptr);
  return j;
}

Json envelope(const char* command) { return {{"schema", kJsonSchema}, {"command", command}}; }

void write_filling(std::ostream& os, const FillingResult& r, bool basis_change) {
  os << "family: " << to_string(r.family) << "\nsign: " << to_string(r.sign) << "\nm: " << r.m
     << "\nfilling slope: " << r.slope << "\nknot: " << r.knot << '\n';
  if (r.rational) {
    os << "numerator terms: " << r.rational->num().size() << "\ndenominator terms: " << r.rational->den().size()
       << "\nexpression: ";
    r.rational->write(os);
  } else {
    os << "expression: ";
    r.radical->write(os);
    os << "\nconjugate product: ";
    r.conjugate_product.write(os);
  }
  os << '\n';
  if (basis_change && r.basis_changed) {
    os << "basis changed: ";
    r.basis_changed->write(os);
    os << '\n';
  }
}

}  // namespace twistpoly
