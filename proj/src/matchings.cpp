#include "twistpoly/matchings.hpp"

#include <stdexcept>

namespace twistpoly {

const VarTablePtr& tail_vars() {
  static const VarTablePtr v = make_vars({"g_f", "g_o", "g_p"});
  return v;
}

LadderGraph::LadderGraph(int rungs) : n(rungs) {
  if (rungs < 1) throw std::invalid_argument("ladder needs at least one rung");
}

std::vector<Matching> enumerate_matchings(int n) {
  if (n < 1) throw std::invalid_argument("ladder needs at least one rung");
  if (n > kMaxLadder) throw std::invalid_argument("ladder too large for exhaustive enumeration");
  std::vector<Matching> out;
  const std::uint32_t slots = static_cast<std::uint32_t>(n - 1);
  for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
    if (mask & (mask >> 1)) continue;
    Matching m;
    for (std::uint32_t i = 0; i < slots; ++i)
      if (mask & (1u << i)) m.chosen.push_back(static_cast<int>(i) + 1);
    out.push_back(std::move(m));
  }
  return out;
}

Poly matching_weight(const LadderGraph& g, const Matching& m) {
  std::vector<bool> covered(g.n + 2, false);
  int prev = -1;
  Exponents e(3, 0);
  for (int i : m.chosen) {
    if (i < 1 || i > g.n - 1 || i <= prev || i == prev + 1) throw std::invalid_argument("invalid matching");
    prev = i;
    covered[i] = covered[i + 1] = true;
    if (i % 2 == 1)
      e[0] += 2;
    else
      e[1] += 2;
  }
  int sign = 1;
  for (int r = 1; r <= g.n; ++r) {
    if (covered[r]) continue;
    e[2] += 1;
    if (r % 2 == 0) sign = -sign;
  }
  return Poly::monomial(tail_vars(), e, sign);
}

Poly P(int n) {
  if (n == 0) return Poly::constant(tail_vars(), 1);
  LadderGraph g(n);
  std::vector<Term> terms;
  for (const auto& m : enumerate_matchings(n)) {
    Poly w = matching_weight(g, m);
    terms.push_back(w.terms().front());
  }
  return Poly::from_terms(tail_vars(), std::move(terms));
}

std::uint64_t binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r.get_ui();
}

std::uint64_t count_subsets(int n, int a, int b) {
  if (n < 1 || a < 0 || b < 0) return 0;
  // The all-odd subset {1, 3, ..., 2n-1}: the product formula would read
  // C(-1, 0) here, while the count is 1.
  if (a == n && b == 0) return 1;
  if (a + b >= n) return 0;
  return binomial(n - 1 - a, b) * binomial(n - b, a);
}

std::uint64_t count_subsets_bruteforce(int n, int a, int b) {
  const int slots = 2 * n - 1;
  if (slots > 2 * kMaxLadder) throw std::invalid_argument("too large for brute force");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots); ++mask) {
    if (mask & (mask >> 1)) continue;
    int odd = 0, even = 0;
    for (int i = 0; i < slots; ++i)
      if (mask & (std::uint64_t(1) << i)) ((i + 1) % 2 ? odd : even)++;
    if (odd == a && even == b) ++count;
  }
  return count;
}

std::uint64_t fibonacci(int n) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    std::uint64_t t = a + b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace twistpoly
