#pragma once

// The identity suite: every structural invariant of the library evaluated on
// seeded random inputs for a list of (L, a, b) cases.

#include <cstdint>
#include <string>
#include <vector>

namespace qhal {

struct SuiteCase {
  int L = 9;
  int a = 3;
  int b = 3;
};

struct SuiteRow {
  std::string case_label;  // "L=9 lattice=3x3"
  std::string check;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

std::vector<SuiteCase> standard_suite_cases();

/// Runs all checks for every case. Each case uses its own generator seeded from
/// (seed, L, a, b), so results do not depend on case order.
std::vector<SuiteRow> run_suite(const std::vector<SuiteCase>& cases, std::uint64_t seed);

}  // namespace qhal
