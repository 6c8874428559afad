#pragma once

#include <cstdint>
#include <vector>

// The real Dirichlet character chi(n) = (delta/n) on integers coprime to
// 2*delta (0 elsewhere), stored as one explicit period of length 4|delta|.
// Construction cross-checks the Jacobi-form definition entry by entry
// against the Kronecker symbol (4*delta / n); the two must agree.

namespace divsum {

struct RealCharacter {
  int64_t delta = 0;
  int64_t conductor_q = 0;            // 4|delta|
  std::vector<int8_t> period_values;  // chi(0..q-1)
  std::vector<int32_t> prefix;        // prefix[i] = sum of chi(1..i), 0 <= i <= q

  int chi_at(int64_t n) const {  // n >= 0
    return period_values[static_cast<size_t>(n % conductor_q)];
  }
};

// Requires delta nonzero, squarefree, delta != 1 (mod 4).
RealCharacter make_character(int64_t delta);

// X(N) = sum_{1<=n<=N} chi(n); O(1) beyond one period since a full period
// sums to zero.
int64_t partial_sum(const RealCharacter& ch, int64_t n_upper);

// True iff no proper divisor d of q already carries the character
// (scan for a shorter period among residues coprime to q).
bool is_primitive(const RealCharacter& ch);

// Polya-Vinogradov cap g(q) = (1/2) sqrt(q) ln(q) + 1.2 sqrt(q), and
// kappa(delta) = g(4|delta|): |X(N)| < kappa for all N.
double g_of(double q);
double kappa(int64_t delta);

// Qiu's explicit character-sum bound with the exact gcd(N, q) term:
//   (4/pi^2) sqrt(q) ln q + 0.38 sqrt(q) + 0.608/sqrt(q) + 0.116 (N,q)^2 / q^(3/2).
// The 4/pi^2 coefficient is kept symbolic here; the printed-rounding variant
// lives in qiu_rhs_trivial's majorant chain_k.
double qiu_rhs(int64_t q, int64_t n_upper);

// Same with (N,q)^2 replaced by its trivial cap q^2; this is the version
// that the majorization chain compares against g(q).
double qiu_rhs_trivial(int64_t q);

// K(x) = 0.812 x ln x + 0.496 x + 0.608/x; satisfies K(x) < x ln x + 1.2 x
// for x >= 1, which yields qiu_rhs_trivial(q) <= K(sqrt q) < g(q).
double chain_k(double x);

struct MaxPartialSum {
  int64_t value = 0;   // max over 1 <= N <= n_max of |X(N)|
  int64_t argmax = 0;  // smallest N attaining it
};
MaxPartialSum max_abs_partial_sum(const RealCharacter& ch, int64_t n_max);

// sum_{m<=x} chi(m)/m, exact finite sum with compensated accumulation.
double char_harmonic_sum(const RealCharacter& ch, double x);

// Case-split cap for the harmonic sum: 1 + ln(x) while the trivial bound
// |X(u)| <= u is sharper (x <= kappa), ln(kappa) + 2 beyond. Always
// <= ln(kappa) + 2.
double char_harmonic_bound(double kappa_value, double x);

}  // namespace divsum
