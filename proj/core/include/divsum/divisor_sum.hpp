#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "divsum/bounds.hpp"
#include "divsum/quadratic.hpp"

// Exact computation of S(N) = sum_{n<=N} tau(f(n)) by three independent
// routes, plus the verification harness pitting exact sums against the
// explicit bounds.
//
// The fast path factors every f(n), n <= N, at once: for each prime
// p <= sqrt(f(N)) the roots of (m+b)^2 = delta (mod p) define arithmetic
// progressions of n with p | f(n); walking them and dividing out the full
// p-adic valuation leaves each entry either 1 or a single prime cofactor
// beyond sqrt(f(N)), so divisor counts multiply out exactly. For p | 2*delta
// the valuation never exceeds 1 in the admissible delta regime, and for the
// other primes the two roots cover every lift, so no Hensel stage is needed.

namespace divsum {

struct WorkLimits {
  int64_t max_n = 10'000'000;
  std::size_t max_memory_bytes = std::size_t{2} << 30;  // 2 GiB
  int threads = 0;            // 0 = hardware concurrency
  int64_t segment_size = 1 << 20;
};

// tau(f(n)) for 1 <= n <= n_upper; slot [0] is unused and zero.
// Deterministic and bit-identical for any thread count or segment size.
std::vector<uint32_t> sieve_tau_values(const QuadraticPoly& p, int64_t n_upper,
                                       const WorkLimits& limits = {});

// Same values via per-n factorization; the independent oracle.
std::vector<uint32_t> naive_tau_values(const QuadraticPoly& p, int64_t n_upper);

// Range variants for polynomials positive only from some n onward;
// element [k] holds tau(f(n_lo + k)).
std::vector<uint32_t> naive_tau_values_range(const QuadraticPoly& p, int64_t n_lo, int64_t n_hi);
std::vector<uint32_t> hyperbola_tau_values_range(const QuadraticPoly& p, int64_t n_lo,
                                                 int64_t n_hi);

int64_t exact_sum_naive(const QuadraticPoly& p, int64_t n_upper);
int64_t exact_sum_sieve(const QuadraticPoly& p, int64_t n_upper, const WorkLimits& limits = {});

// Third route: per-n count of divisors d <= sqrt(f(n)), doubled, minus one
// when f(n) is a perfect square.
int64_t hyperbola_count(const QuadraticPoly& p, int64_t n_upper);
int64_t hyperbola_count_range(const QuadraticPoly& p, int64_t n_lo, int64_t n_hi);

enum class BoundKind { theorem1, sqrtf, theorem2, refined };

struct VerificationRecord {
  int64_t n_upper = 0;
  int64_t exact = 0;
  double bound = 0.0;
  double margin = 0.0;  // bound - exact; positive for every valid input
  double ratio = 0.0;   // exact / (N ln N) for N >= 2, else 0
};

// One record per requested N (input order preserved), all exact sums from a
// single sieve run to max(ns). Enforces the full hypotheses, including
// positivity; throws if any margin fails to be strictly positive.
// theorem2/refined apply to n^2 + 1 only; refined additionally needs
// every N >= 1000.
std::vector<VerificationRecord> verify(const QuadraticPoly& p, const std::vector<int64_t>& ns,
                                       BoundKind kind, const WorkLimits& limits = {});

}  // namespace divsum
