#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eufro {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Exact identity suite plus one seeded stochastic check. quick limits n to 10.
std::vector<CheckResult> run_selftest(bool quick, std::uint64_t seed);

}  // namespace eufro
