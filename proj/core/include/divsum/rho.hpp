#pragma once

#include <cstdint>

#include "divsum/character.hpp"
#include "divsum/quadratic.hpp"

// rho(d) = #{ 0 <= m < d : m^2 + 2bm + c = 0 (mod d) }, computed three
// independent ways: by definition, by multiplicative assembly from the
// local values at prime powers, and as the Dirichlet convolution
// rho = mu^2 * chi. The three must agree whenever delta is squarefree
// and delta != 1 (mod 4); that agreement is this module's central check.

namespace divsum {

// Literal residue count; O(d), intended for d up to ~10^6.
int64_t rho_brute(const QuadraticPoly& p, int64_t d);

// Multiplicative closed form over factorize(d). Local values:
//   p = 2:            1 for exponent 1, 0 for exponent >= 2
//   odd p | delta:    1 for exponent 1, 0 for exponent >= 2
//   odd p, p ∤ delta: 1 + (delta/p) for every exponent >= 1
// Requires the delta hypotheses; refuses to extrapolate outside them.
int64_t rho_closed(const QuadraticPoly& p, int64_t d);

// Literal divisor-pair sum  sum_{l*m = d} mu^2(l) chi(m).
int64_t rho_convolved(const QuadraticPoly& p, const RealCharacter& ch, int64_t d);
int64_t rho_convolved(const QuadraticPoly& p, int64_t d);  // builds the character per call

struct RhoTriple {
  int64_t d = 0;
  int64_t brute = 0;
  int64_t closed = 0;
  int64_t convolved = 0;
  bool agree() const { return brute == closed && closed == convolved; }
};
RhoTriple rho_triple(const QuadraticPoly& p, const RealCharacter& ch, int64_t d);

// sum_{d<=x} rho(d) and sum_{d<=x} rho(d)/d via the closed form.
int64_t sum_rho(const QuadraticPoly& p, double x);
double sum_rho_over_d(const QuadraticPoly& p, double x);

}  // namespace divsum
