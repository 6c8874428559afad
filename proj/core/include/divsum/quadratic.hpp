#pragma once

#include <cstdint>

#include "divsum/int128.hpp"

// The polynomial family f(n) = n^2 + 2bn + c, its discriminant
// delta = b^2 - c, and the scale quantities used by the bound assembly:
// xi with sqrt(f(n)) <= xi*n and a_shift with sqrt(f(n)) <= n + a_shift.

namespace divsum {

struct QuadraticPoly {
  int64_t b = 0;
  int64_t c = 0;
  int64_t delta = 0;   // b*b - c
  double xi = 1.0;     // sqrt(1 + 2|b| + |c|)
  int64_t a_shift = 1; // least positive integer >= max(|b|, sqrt(|c|))
};

struct HypothesisReport {
  bool delta_nonzero = false;
  bool delta_squarefree = false;
  bool delta_not_1_mod_4 = false;
  bool positive_nondecreasing = false;
  bool all_satisfied = false;
};

QuadraticPoly make_poly(int64_t b, int64_t c);

// Report, not exception: callers decide which hypotheses they require.
// positive_nondecreasing holds iff b >= -1 and f(1) > 0 (for integer b the
// forward difference 2n+1+2b is nonnegative on n >= 1 exactly when b >= -1,
// and then positivity at n = 1 propagates).
HypothesisReport check_hypotheses(const QuadraticPoly& p);

// Exact f(n) = (n+b)^2 - delta, overflow-checked.
int128 eval_f(const QuadraticPoly& p, int64_t n);

}  // namespace divsum
