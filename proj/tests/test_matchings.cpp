#include <doctest.h>

#include "twistpoly/matchings.hpp"
#include "twistpoly/parse.hpp"

using namespace twistpoly;

namespace {
Poly tp(const char* s) { return parse_poly(s, tail_vars()); }
}  // namespace

TEST_CASE("ladder matchings are counted by Fibonacci numbers") {
  const std::uint64_t fib[] = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
  for (int n = 1; n <= 12; ++n) CHECK(enumerate_matchings(n).size() == fib[n - 1]);
}

TEST_CASE("matching polynomials") {
  CHECK(P(0) == tp("1"));
  CHECK(P(1) == tp("g_p"));
  CHECK(P(2) == tp("g_f^2 - g_p^2"));
  CHECK(P(3) == tp("g_f^2*g_p + g_o^2*g_p - g_p^3"));
  CHECK(P(4) == tp("g_f^4 - 2*g_f^2*g_p^2 - g_o^2*g_p^2 + g_p^4"));
}

TEST_CASE("weights of single matchings") {
  LadderGraph g(4);
  CHECK(matching_weight(g, Matching{{}}) == tp("g_p^4"));
  CHECK(matching_weight(g, Matching{{2}}) == tp("-g_o^2*g_p^2"));
  CHECK(matching_weight(g, Matching{{1, 3}}) == tp("g_f^4"));
  CHECK_THROWS(matching_weight(g, Matching{{1, 2}}));
  CHECK_THROWS(matching_weight(g, Matching{{4}}));
}

TEST_CASE("subset counts against brute force") {
  CHECK(count_subsets(4, 1, 1) == 6);
  CHECK(count_subsets(5, 5, 0) == 1);
  CHECK(count_subsets(5, 0, 5) == 0);
  for (int n = 1; n <= 8; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) CHECK(count_subsets(n, a, b) == count_subsets_bruteforce(n, a, b));
}

TEST_CASE("size guard") { CHECK_THROWS(enumerate_matchings(kMaxLadder + 1)); }
