#include <chrono>
#include <cstdio>
#include <exception>

#include "twistpoly/checks.hpp"

int main() {
  using namespace twistpoly;
  CheckOptions opts;
  int failed = 0;
  for (int id = 1; id <= kCriteria; ++id) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = run_criterion(id, opts);
    } catch (const std::exception& e) {
      r = {"criterion " + std::to_string(id), false, e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.pass) ++failed;
    std::printf("%s criterion %d: %s (%s) [%.2fs]\n", r.pass ? "PASS" : "FAIL", id, criterion_title(id),
                r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
