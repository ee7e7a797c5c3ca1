#pragma once

#include <cstdint>
#include <vector>

#include "twistpoly/poly.hpp"

namespace twistpoly {

// Variables g_f, g_o, g_p shared by the matching and H_n code.
const VarTablePtr& tail_vars();

struct LadderGraph {
  int n;
  explicit LadderGraph(int rungs);
};

// Chosen horizontal pair slots, a subset of 1..n-1 with no two consecutive.
struct Matching {
  std::vector<int> chosen;
};

constexpr int kMaxLadder = 24;

std::vector<Matching> enumerate_matchings(int n);
Poly matching_weight(const LadderGraph& g, const Matching& m);
Poly P(int n);

std::uint64_t binomial(long n, long k);
std::uint64_t count_subsets(int n, int a, int b);
// Subsets of {1..2n-1} with a odd and b even elements and no two consecutive.
std::uint64_t count_subsets_bruteforce(int n, int a, int b);

std::uint64_t fibonacci(int n);

}  // namespace twistpoly
