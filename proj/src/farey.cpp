#include "twistpoly/farey.hpp"

#include <numeric>
#include <stdexcept>

namespace twistpoly {

using i128 = __int128;

Slope::Slope(std::int64_t num, std::int64_t den) : p(num), q(den) {
  if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not a slope");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q == 0) p = 1;
}

Slope Slope::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("");
      return Slope(n, 1);
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument("");
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument("");
    return Slope(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad slope '" + s + "'");
  }
}

std::string Slope::to_string() const { return std::to_string(p) + "/" + std::to_string(q); }

std::string Slope::var() const { return "g_" + to_string(); }

bool operator<(const Slope& a, const Slope& b) {
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  return i128(a.p) * b.q < i128(b.p) * a.q;
}

bool is_neighbor(const Slope& a, const Slope& b) {
  i128 d = i128(a.p) * b.q - i128(a.q) * b.p;
  return d == 1 || d == -1;
}

FareyTriangle::FareyTriangle(Slope x, Slope y, Slope z) : a(x), b(y), c(z) {
  if (!is_neighbor(a, b) || !is_neighbor(b, c) || !is_neighbor(a, c))
    throw std::invalid_argument("slopes " + a.to_string() + ", " + b.to_string() + ", " + c.to_string() +
                                " do not form a Farey triangle");
}

namespace {

// The two triangles on edge {x, y} have third vertices (x +- y).
Slope far_vertex(const Slope& x, const Slope& y, const Slope& other) {
  Slope s1(x.p + y.p, x.q + y.q);
  if (!(s1 == other)) return s1;
  return Slope(x.p - y.p, x.q - y.q);
}

// Position on the circle read increasing from `start`.
std::pair<int, Slope> circle_key(const Slope& start, const Slope& s) {
  return {start < s ? 0 : 1, s};
}

bool circle_before(const Slope& start, const Slope& a, const Slope& b) {
  auto ka = circle_key(start, a), kb = circle_key(start, b);
  if (ka.first != kb.first) return ka.first < kb.first;
  return ka.second < kb.second;
}

}  // namespace

Walk Walk::parse(std::string_view spec) {
  std::string tri, word, to;
  bool have_tri = false, have_word = false;
  std::string s(spec);
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("walk item without '=': " + item);
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "triangle") {
      tri = val;
      have_tri = true;
    } else if (key == "word") {
      word = val;
      have_word = true;
    } else if (key == "to") {
      to = val;
    } else {
      throw std::invalid_argument("unknown walk key '" + key + "'");
    }
  }
  if (!have_tri || !have_word) throw std::invalid_argument("walk needs triangle= and word=");
  std::vector<Slope> v;
  std::size_t p = 0;
  while (p <= tri.size()) {
    std::size_t c = tri.find(',', p);
    if (c == std::string::npos) c = tri.size();
    v.push_back(Slope::parse(tri.substr(p, c - p)));
    p = c + 1;
  }
  if (v.size() != 3) throw std::invalid_argument("triangle needs three slopes");
  for (char ch : word)
    if (ch != 'L' && ch != 'R') throw std::invalid_argument("word must use only L and R");
  Walk w{FareyTriangle(v[0], v[1], v[2]), word};
  if (!to.empty()) {
    Slope h = Slope::parse(to);
    if (!(walk_labels(w).front().h == h)) throw std::invalid_argument("initial step does not head to " + to);
  }
  return w;
}

std::string Walk::to_string() const {
  return "triangle=" + t0.a.to_string() + "," + t0.b.to_string() + "," + t0.c.to_string() + ";word=" + word;
}

std::vector<StepLabels> walk_labels(const Walk& w) {
  std::vector<StepLabels> out;
  StepLabels s0;
  s0.k = 0;
  s0.direction = 'R';
  s0.o = w.t0.b;
  const Slope& x = w.t0.a;
  const Slope& y = w.t0.c;
  s0.h = far_vertex(x, y, s0.o);
  if (circle_before(s0.o, x, y)) {
    s0.f = x;
    s0.p = y;
  } else {
    s0.f = y;
    s0.p = x;
  }
  if (!circle_before(s0.o, s0.f, s0.h) || !circle_before(s0.o, s0.h, s0.p))
    throw std::logic_error("initial step labels out of circular order");
  out.push_back(s0);
  for (std::size_t j = 0; j < w.word.size(); ++j) {
    const StepLabels& prev = out.back();
    StepLabels s;
    s.k = static_cast<int>(j) + 1;
    s.direction = w.word[j];
    if (s.direction == prev.direction) {
      s.p = prev.p;
      s.o = prev.f;
    } else {
      s.p = prev.f;
      s.o = prev.p;
    }
    s.f = prev.h;
    s.h = far_vertex(s.p, s.f, s.o);
    out.push_back(s);
  }
  return out;
}

WordAnatomy anatomy(std::string_view word) {
  if (word.size() < 2) throw std::invalid_argument("word needs at least two letters");
  if (word.find_first_not_of("LR") != std::string_view::npos)
    throw std::invalid_argument("word letters must be L or R");
  WordAnatomy a;
  a.tip = word.back();
  std::size_t end = word.size() - 1;
  std::size_t start = end - 1;
  while (start > 0 && word[start - 1] == word[end - 1]) --start;
  a.tail = std::string(word.substr(start, end - start));
  a.body = std::string(word.substr(0, start));
  a.tail_start_step = static_cast<int>(start) + 1;
  a.tip_matches_tail = a.tip == a.tail.front();
  return a;
}

int crossing_count(const Slope& s, const Slope& h) {
  if (s == h) throw std::invalid_argument("crossing_count needs distinct slopes");
  // (a y - b x) = 1; the inverse of [[a, x], [b, y]] sends s to 1/0.
  auto ext = [](i128 a, i128 b, i128& u, i128& v) {
    i128 u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (b != 0) {
      i128 t = a / b;
      i128 r = a - t * b;
      a = b;
      b = r;
      i128 nu = u0 - t * u1, nv = v0 - t * v1;
      u0 = u1;
      v0 = v1;
      u1 = nu;
      v1 = nv;
    }
    if (a < 0) {
      u0 = -u0;
      v0 = -v0;
    }
    u = u0;
    v = v0;
  };
  i128 a = s.p, b = s.q, u, v;
  ext(a, b, u, v);  // a u + b v = 1
  const i128 y = u, x = -v;
  i128 num = y * h.p - x * h.q;
  i128 den = -b * h.p + a * h.q;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0) throw std::logic_error("crossing_count normalisation failed");
  if (den == 1) return 0;
  i128 r = num % den;
  if (r < 0) r += den;
  i128 X = den, Y = r, sum = 0;
  while (Y != 0) {
    sum += X / Y;
    i128 t = X % Y;
    X = Y;
    Y = t;
  }
  return static_cast<int>(sum - 1);
}

FareyEdgeSet::FareyEdgeSet(int bound) : bound_(bound) {
  std::vector<Slope> verts;
  for (std::int64_t q = 0; q <= bound; ++q)
    for (std::int64_t p = -bound; p <= bound; ++p) {
      if (std::gcd(p, q) != 1 || (q == 0 && p != 1)) continue;
      verts.emplace_back(p, q);
    }
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (is_neighbor(verts[i], verts[j])) {
        auto size = [](const Slope& z) { return static_cast<int>(std::max<std::int64_t>(std::abs(z.p), z.q)); };
        edges_.push_back({verts[i], verts[j], std::max(size(verts[i]), size(verts[j]))});
      }
}

int FareyEdgeSet::crossings(const Slope& s, const Slope& h, int limit) const {
  if (s == h) throw std::invalid_argument("crossing count needs distinct slopes");
  const Slope& lo = s < h ? s : h;
  const Slope& hi = s < h ? h : s;
  auto inside = [&](const Slope& z) { return lo < z && z < hi; };
  int n = 0;
  for (const auto& e : edges_) {
    if (e.size > limit) continue;
    if (e.x == s || e.x == h || e.y == s || e.y == h) continue;
    if (inside(e.x) != inside(e.y)) ++n;
  }
  return n;
}

int crossing_count_oracle(const Slope& s, const Slope& h, int bound) {
  return FareyEdgeSet(bound).crossings(s, h, bound);
}

}  // namespace twistpoly
