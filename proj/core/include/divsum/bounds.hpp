#pragma once

#include <cstdint>

#include "divsum/quadratic.hpp"

// Assembly of the explicit constants and bound evaluators:
//
//   sum_{n<=N} tau(n^2 + 2bn + c) < C1 N ln N + C2 N + C3
//
// with C1 = 1.216 (ln kappa + 2), C2 = 2 (kappa + (ln kappa + 2)
// (0.608 ln xi + 1.166)), C3 = 2 kappa A, and the sharpened n^2+1 bounds
// 1.216 N ln N + 4.332 N (any N) and 1.216 N ln N + 3.336 N (N >= 1000).
//
// The decimal coefficients are pinned as exact literals: the published
// statements are fixed to these printed decimals, and the derivation
// helpers below reconstruct them from their components as a regression.

namespace divsum {

// 0.608 rounds 6/pi^2 upward; 1.166 is Ramare's explicit constant for
// sum mu^2(n)/n <= 0.608 ln x + 1.166 (1.048 suffices for x >= 1000,
// where also sum mu^2(n) <= 0.62 x).
inline constexpr double kHarmonicLogCoef = 0.608;
inline constexpr double kHarmonicConst = 1.166;
inline constexpr double kHarmonicConstLarge = 1.048;
inline constexpr double kSquarefreeCountCoef = 0.62;

inline constexpr double kSharpNLogNCoef = 1.216;    // 2 * 0.608
inline constexpr double kSharpLinearCoef = 4.332;   // 2 * 1.166 + 2
inline constexpr double kRefinedLinearCoef = 3.336; // 2 * 1.048 + 2 * 0.62

struct BoundConstants {
  double kappa = 0.0;
  double xi = 0.0;
  int64_t a_shift = 1;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

// Constants for a polynomial whose delta hypotheses hold. Positivity of f
// on n >= 1 is enforced unless the caller explicitly waives it (the
// constants are well-defined regardless; exact-sum verification is not).
BoundConstants constants_for(const QuadraticPoly& p, bool allow_nonpositive = false);

// Pure pipeline: (kappa, xi, A) -> (C1, C2, C3), no hypothesis checks.
BoundConstants constants_from_parts(double kappa_value, double xi, int64_t a_shift);

// C1 N ln N + C2 N + C3
double theorem1_bound(const BoundConstants& bc, int64_t n_upper);

// The intermediate bound using the true sqrt(f(N)):
//   2N (ln kappa + 2)(0.608 ln sqrt(f(N)) + 1.166) + 2 kappa sqrt(f(N));
// always <= theorem1_bound for the same polynomial.
double sqrtF_bound(const QuadraticPoly& p, int64_t n_upper);

// Sharpened bounds for n^2 + 1.
double theorem2_bound(int64_t n_upper);
double refined_bound(int64_t n_upper);  // requires n_upper >= 1000

struct DerivedCoefficients {
  double coef_n_log_n = 0.0;
  double coef_n = 0.0;
};

// Rebuilds (1.216, 4.332) from its components: the character-sum cap and
// ln(kappa)+2 replaced by 1, the divisor summation cut at d <= N. The
// component decimals are combined in exact thousandths so the result is
// bit-identical to the pinned literals.
DerivedCoefficients theorem2_constants_derivation();

// Same with the large-x constants 1.048 and 0.62: (1.216, 3.336).
DerivedCoefficients refined_constants_derivation();

}  // namespace divsum
