#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twistpoly {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct CheckOptions {
  std::uint64_t seed = 20240617;
  int samples = 20;
  bool quick = false;
};

// Invariant suites grouped by module: exact-arith, farey, matchings, hn-core,
// ptolemy-pipeline, families, controls.
const std::vector<std::string>& suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const CheckOptions& opts);

inline constexpr int kCriteria = 8;
const char* criterion_title(int id);
CheckResult run_criterion(int id, const CheckOptions& opts);

}  // namespace twistpoly
