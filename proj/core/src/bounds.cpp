#include "divsum/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "divsum/character.hpp"

namespace divsum {

BoundConstants constants_from_parts(double kappa_value, double xi, int64_t a_shift) {
  BoundConstants bc;
  bc.kappa = kappa_value;
  bc.xi = xi;
  bc.a_shift = a_shift;
  const double log_term = std::log(kappa_value) + 2.0;
  bc.c1 = kSharpNLogNCoef * log_term;
  bc.c2 = 2.0 * (kappa_value + log_term * (kHarmonicLogCoef * std::log(xi) + kHarmonicConst));
  bc.c3 = 2.0 * kappa_value * static_cast<double>(a_shift);
  return bc;
}

BoundConstants constants_for(const QuadraticPoly& p, bool allow_nonpositive) {
  const HypothesisReport rep = check_hypotheses(p);
  if (!rep.delta_nonzero) throw std::invalid_argument("constants_for: delta = 0");
  if (!rep.delta_squarefree) throw std::invalid_argument("constants_for: delta not squarefree");
  if (!rep.delta_not_1_mod_4) throw std::invalid_argument("constants_for: delta = 1 (mod 4)");
  if (!rep.positive_nondecreasing && !allow_nonpositive)
    throw std::invalid_argument("constants_for: f is not positive nondecreasing on n >= 1");
  return constants_from_parts(kappa(p.delta), p.xi, p.a_shift);
}

double theorem1_bound(const BoundConstants& bc, int64_t n_upper) {
  if (n_upper < 1) throw std::invalid_argument("theorem1_bound: N must be >= 1");
  const auto n = static_cast<double>(n_upper);
  return bc.c1 * n * std::log(n) + bc.c2 * n + bc.c3;
}

double sqrtF_bound(const QuadraticPoly& p, int64_t n_upper) {
  if (n_upper < 1) throw std::invalid_argument("sqrtF_bound: N must be >= 1");
  const int128 f_n = eval_f(p, n_upper);
  if (f_n <= 0) throw std::domain_error("sqrtF_bound: f(N) <= 0");
  const double root_f = std::sqrt(static_cast<double>(f_n));
  const double log_term = std::log(kappa(p.delta)) + 2.0;
  const auto n = static_cast<double>(n_upper);
  return 2.0 * n * log_term * (kHarmonicLogCoef * std::log(root_f) + kHarmonicConst) +
         2.0 * kappa(p.delta) * root_f;
}

double theorem2_bound(int64_t n_upper) {
  if (n_upper < 1) throw std::invalid_argument("theorem2_bound: N must be >= 1");
  const auto n = static_cast<double>(n_upper);
  return kSharpNLogNCoef * n * std::log(n) + kSharpLinearCoef * n;
}

double refined_bound(int64_t n_upper) {
  if (n_upper < 1000) throw std::invalid_argument("refined_bound: requires N >= 1000");
  const auto n = static_cast<double>(n_upper);
  return kSharpNLogNCoef * n * std::log(n) + kRefinedLinearCoef * n;
}

namespace {

// The published coefficients are exact three-decimal values; combining
// them in integer thousandths and dividing once avoids double rounding.
DerivedCoefficients combine_milli(int64_t harmonic_log_coef, int64_t harmonic_const,
                                  int64_t count_coef) {
  DerivedCoefficients out;
  out.coef_n_log_n = static_cast<double>(2 * harmonic_log_coef) / 1000.0;
  out.coef_n = static_cast<double>(2 * harmonic_const + 2 * count_coef) / 1000.0;
  return out;
}

}  // namespace

DerivedCoefficients theorem2_constants_derivation() {
  // kappa -> 1 and ln(kappa)+2 -> 1; sum mu^2(l) <= l * 1
  return combine_milli(608, 1166, 1000);
}

DerivedCoefficients refined_constants_derivation() {
  // harmonic constant 1.048 and count coefficient 0.62 for N >= 1000
  return combine_milli(608, 1048, 620);
}

}  // namespace divsum
