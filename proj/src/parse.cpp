#include "twistpoly/parse.hpp"

#include <algorithm>
#include <cctype>

namespace twistpoly {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Reads an identifier starting at s[i]; advances i.
std::string read_identifier(std::string_view s, std::size_t& i) {
  const std::size_t start = i;
  if (s.substr(i, 2) == "g_") {
    i += 2;
    if (i < s.size() && (s[i] == '-' || digit(s[i]))) {
      if (s[i] == '-') ++i;
      if (i >= s.size() || !digit(s[i])) throw ParseError("bad slope variable near position " + std::to_string(start));
      while (i < s.size() && digit(s[i])) ++i;
      if (i + 1 < s.size() && s[i] == '/' && digit(s[i + 1])) {
        ++i;
        while (i < s.size() && digit(s[i])) ++i;
      }
      if (i < s.size() && s[i] == '(') {
        while (i < s.size() && s[i] != ')') ++i;
        if (i == s.size()) throw ParseError("unterminated '(' in variable name");
        ++i;
      }
    } else {
      while (i < s.size() && ident_char(s[i])) ++i;
    }
  } else {
    while (i < s.size() && ident_char(s[i])) ++i;
  }
  return std::string(s.substr(start, i - start));
}

class Parser {
 public:
  Parser(std::string_view s, const VarTablePtr& vars) : s_(s), vars_(vars) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  std::string_view s_;
  const VarTablePtr& vars_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(i_) + " in '" + std::string(s_.substr(0, 80)) +
                     (s_.size() > 80 ? "...'" : "'"));
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc{Poly(vars_)};
    bool first = true;
    while (true) {
      skip();
      bool neg = false;
      if (accept('-'))
        neg = true;
      else if (!accept('+') && !first)
        break;
      RatFunc t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip();
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) break;
    }
    return acc;
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (true) {
      if (accept('*'))
        acc = acc * factor();
      else if (accept('/'))
        acc = acc / factor();
      else
        break;
    }
    return acc;
  }

  long exponent() {
    skip();
    bool paren = accept('(');
    skip();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && digit(s_[i_])) ++i_;
    if (start == i_) fail("expected exponent");
    long e = std::stol(std::string(s_.substr(start, i_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  RatFunc factor() {
    RatFunc base = primary();
    if (accept('^')) {
      long e = exponent();
      if (e > 100000 || e < -100000) fail("exponent out of range");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  RatFunc primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      RatFunc r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++i_;
      return -factor();
    }
    if (digit(c)) {
      std::size_t start = i_;
      while (i_ < s_.size() && digit(s_[i_])) ++i_;
      return RatFunc::constant(vars_, Rational(Integer(std::string(s_.substr(start, i_ - start)))));
    }
    if (ident_start(c)) {
      std::string name = read_identifier(s_, i_);
      auto idx = vars_->index(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return RatFunc(Poly::variable(vars_, *idx));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const VarTablePtr& vars) {
  NormModeGuard guard(norm_mode());
  return Parser(text, vars).run();
}

Poly parse_poly(std::string_view text, const VarTablePtr& vars) {
  RatFunc r = parse_ratfunc(text, vars);
  if (!r.is_polynomial()) throw ParseError("expression is not a polynomial: " + std::string(text.substr(0, 80)));
  return r.num().scaled(1 / r.den().constant_value());
}

std::vector<std::string> scan_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i]) && (i == 0 || !ident_char(text[i - 1]))) {
      std::string name = read_identifier(text, i);
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace twistpoly
