#pragma once

// Minimal always-on assertion helpers for the plain (non-doctest) test
// binaries: the CLI driver and the acceptance suite.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace testsupport {

inline int g_failures = 0;

#define TS_CHECK(cond, msg)                                                      \
  do {                                                                           \
    if (!(cond)) {                                                               \
      std::fprintf(stderr, "[FAIL] %s:%d %s\n", __FILE__, __LINE__, msg);        \
      ++testsupport::g_failures;                                                 \
    }                                                                            \
  } while (0)

inline bool close_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }
inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
}

}  // namespace testsupport
