#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "divsum/int128.hpp"

// Exact integer arithmetic primitives: quadratic residue symbols,
// Mobius/divisor-count sieves, factorization, square detection.
// Everything here is a pure function of its inputs; SieveTables is
// immutable after construction and safe to share across threads.

namespace divsum {

// Jacobi symbol (a/n). Requires n odd and positive; (a/1) = 1 and
// (a/n) = 0 exactly when gcd(a, n) > 1.
int jacobi(int64_t a, int64_t n);

// Kronecker symbol (a/n), the standard total extension of Jacobi:
// multiplicative in n, (a/2) = 0 for even a and +-1 by a mod 8 otherwise,
// (a/-1) = sign of a, and (a/0) = 1 iff a = +-1.
int kronecker(int64_t a, int64_t n);

struct SieveTables {
  int64_t limit = 0;
  std::vector<int8_t> mobius;  // mobius[n] = mu(n) for 1 <= n <= limit
  std::vector<uint16_t> tau;   // tau[n] = number of divisors of n

  int mu_at(int64_t n) const;
  int64_t tau_at(int64_t n) const;
};

inline constexpr std::size_t kDefaultSieveMemoryBytes = std::size_t{2} << 30;  // 2 GiB

// Linear sieve for mu and tau over 1..limit. Persistent tables take
// 3*(limit+1) bytes; construction uses a further 2*(limit+1) transient
// bytes, all counted against the ceiling.
SieveTables build_sieves(int64_t limit,
                         std::size_t memory_ceiling_bytes = kDefaultSieveMemoryBytes);

struct Factor {
  int128 prime;
  int exponent;
};
using FactorList = std::vector<Factor>;

// Deterministic primality test. Below 2^64 this is a proven sprp base set;
// above it, fixed-base Miller-Rabin (no randomness anywhere).
bool is_prime(uint128 n);

// Complete factorization of n >= 1, primes strictly increasing.
// Wheel trial division below 2^64, Miller-Rabin plus a Brent-cycle rho
// splitter with fixed parameters above.
FactorList factorize(int128 n);

bool is_squarefree(int128 n);  // uses |n|; rejects n = 0
bool is_perfect_square(int128 n);
int64_t tau_of(int128 n);  // product of (e_i + 1) over factorize(n)

// sum_{n<=x} mu^2(n)/n, compensated (Kahan) accumulation: relative error
// stays below 2^-30 for x <= 10^7. Requires x <= tables.limit.
double squarefree_harmonic_sum(const SieveTables& tables, double x);

// sum_{n<=x} mu^2(n). Requires x <= tables.limit.
int64_t squarefree_count(const SieveTables& tables, double x);

// Modular arithmetic used by the root sieve; exposed for reuse and tests.
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);

// Solves x^2 = a (mod p) for odd prime p with (a/p) = 1, returning the
// smaller root. Tonelli-Shanks with the non-residue found by scanning
// 2, 3, 5, ... (deterministic).
uint64_t sqrt_mod(uint64_t a, uint64_t p);

}  // namespace divsum
