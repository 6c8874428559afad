#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "divsum/arith.hpp"

using namespace divsum;

namespace {

// Brute-force Jacobi oracle: for odd prime p the symbol is (#solutions of
// x^2 = a) - 1 when p does not divide a, 0 otherwise; extended
// multiplicatively over the factorization of n.
class JacobiOracle {
 public:
  int operator()(int64_t a, int64_t n) {
    int result = 1;
    for (const Factor& f : factorize(n)) {
      const auto p = static_cast<int64_t>(f.prime);
      const int s = symbol_mod_prime(((a % p) + p) % p, p);
      if (s == 0) return 0;
      if (f.exponent % 2 == 1) result *= s;
    }
    return result;
  }

 private:
  int symbol_mod_prime(int64_t a, int64_t p) {
    auto& counts = table_[p];
    if (counts.empty()) {
      counts.assign(static_cast<size_t>(p), 0);
      for (int64_t x = 0; x < p; ++x) ++counts[static_cast<size_t>(x * x % p)];
    }
    if (a == 0) return 0;
    return counts[static_cast<size_t>(a)] > 0 ? 1 : -1;
  }

  std::map<int64_t, std::vector<int8_t>> table_;
};

}  // namespace

TEST_CASE("jacobi: pinned values") {
  CHECK(jacobi(1, 1) == 1);   // empty product
  CHECK(jacobi(2, 15) == 1);  // (2/3)(2/5) = (-1)(-1)
  CHECK(jacobi(-1, 5) == 1);  // 2^2 = -1 (mod 5)
  CHECK(jacobi(0, 3) == 0);
  CHECK(jacobi(3, 9) == 0);
  CHECK(jacobi(1000000006, 1000000007) == -1);  // (-1/p) for p = 3 (mod 4)
  CHECK_THROWS_AS(jacobi(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(jacobi(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(jacobi(1, -3), std::invalid_argument);
}

TEST_CASE("jacobi: agrees with the residue-count oracle") {
  JacobiOracle oracle;
  for (int64_t n = 1; n <= 2001; n += 2)
    for (int64_t a = -2000; a <= 2000; ++a) CHECK(jacobi(a, n) == oracle(a, n));
  // coarser grid out to 10^4
  for (int64_t n = 2003; n <= 9999; n += 26)
    for (int64_t a = -9996; a <= 9996; a += 17) CHECK(jacobi(a, n) == oracle(a, n));
}

TEST_CASE("kronecker: pinned conventional values") {
  // mod-4 character values
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(-4, 1) == 1);
  CHECK(kronecker(-4, 5) == 1);
  CHECK(kronecker(-8, 3) == 1);  // (-2/3): 1^2 = -2 (mod 3)
  // n = 0 and n < 0
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(2, 0) == 0);
  CHECK(kronecker(0, 101) == 0);
  CHECK(kronecker(13, -101) == 1);
  CHECK(kronecker(-13, -101) == -1);
  CHECK(kronecker(-2, -7) == 1);
  CHECK(kronecker(-2, -5) == 1);
  CHECK(kronecker(-2, -3) == -1);
  CHECK(kronecker(-2, -1) == -1);
  CHECK(kronecker(-2, 1) == 1);
  CHECK(kronecker(-2, 3) == 1);
  CHECK(kronecker(-2, 5) == -1);
  // even n
  CHECK(kronecker(7, 2) == 1);   // 7 = -1 (mod 8)
  CHECK(kronecker(3, 2) == -1);  // 3 (mod 8)
  CHECK(kronecker(6, 2) == 0);
  CHECK(kronecker(5, 8) == -1);
  CHECK(kronecker(7, 12) == kronecker(7, 4) * kronecker(7, 3));
}

TEST_CASE("kronecker restricted to odd positive coprime n equals jacobi") {
  for (int64_t n = 1; n <= 801; n += 2)
    for (int64_t a = -800; a <= 800; ++a) {
      if (std::gcd(std::abs(a), n) != 1) continue;
      CHECK(kronecker(a, n) == jacobi(a, n));
    }
  for (int64_t n = 1001; n <= 9999; n += 38)
    for (int64_t a = -9999; a <= 9999; a += 23) {
      if (std::gcd(std::abs(a), n) != 1) continue;
      CHECK(kronecker(a, n) == jacobi(a, n));
    }
}

TEST_CASE("kronecker is multiplicative in nonzero n") {
  for (int64_t a = -60; a <= 60; ++a)
    for (int64_t m = -40; m <= 40; ++m) {
      if (m == 0) continue;
      for (int64_t n = -40; n <= 40; ++n) {
        if (n == 0) continue;
        CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
      }
    }
}

TEST_CASE("build_sieves: small values and edge cases") {
  const SieveTables t = build_sieves(6);
  const std::vector<int8_t> mu_expected{1, -1, -1, 0, -1, 1};
  const std::vector<uint16_t> tau_expected{1, 2, 2, 3, 2, 4};
  for (int64_t n = 1; n <= 6; ++n) {
    CHECK(t.mu_at(n) == mu_expected[static_cast<size_t>(n - 1)]);
    CHECK(t.tau_at(n) == tau_expected[static_cast<size_t>(n - 1)]);
  }

  const SieveTables one = build_sieves(1);
  CHECK(one.tau_at(1) == 1);
  CHECK(one.mu_at(1) == 1);
  CHECK_THROWS_AS(one.tau_at(2), std::out_of_range);

  CHECK_THROWS_AS(build_sieves(0), std::invalid_argument);
  CHECK_THROWS_AS(build_sieves(1'000'000, /*memory_ceiling_bytes=*/4096), std::length_error);
}

TEST_CASE("sieve tables match factorization up to 1e5") {
  const SieveTables t = build_sieves(100'000);
  for (int64_t n = 1; n <= 100'000; ++n) {
    CHECK(t.tau_at(n) == tau_of(n));
    const bool sf = is_squarefree(n);
    CHECK((t.mu_at(n) != 0) == sf);
  }
}

TEST_CASE("factorize: pinned factorizations") {
  CHECK(factorize(1).empty());

  const FactorList f12 = factorize(12);
  REQUIRE(f12.size() == 2);
  CHECK(f12[0].prime == 2);
  CHECK(f12[0].exponent == 2);
  CHECK(f12[1].prime == 3);
  CHECK(f12[1].exponent == 1);

  const FactorList fp = factorize(9999999967);
  REQUIRE(fp.size() == 1);
  CHECK(fp[0].prime == 9999999967);
  CHECK(fp[0].exponent == 1);
  CHECK(is_prime(9999999967));

  // 2^64 - 1 = 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
  const FactorList f64 = factorize(static_cast<int128>(UINT64_MAX));
  const std::vector<int64_t> expected{3, 5, 17, 257, 641, 65537, 6700417};
  REQUIRE(f64.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(static_cast<int64_t>(f64[i].prime) == expected[i]);
    CHECK(f64[i].exponent == 1);
  }

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(-4), std::invalid_argument);
}

TEST_CASE("factorize: beyond 64 bits") {
  // (2^32 + 15)(2^32 + 61), both prime
  const int128 p = 4294967311;
  const int128 q = 4294967357;
  const FactorList f = factorize(p * q);
  REQUIRE(f.size() == 2);
  CHECK(f[0].prime == p);
  CHECK(f[1].prime == q);

  const int128 huge_prime = (int128{1} << 64) + 13;
  CHECK(is_prime(static_cast<uint128>(huge_prime)));
  const FactorList fh = factorize(huge_prime * 9);
  REQUIRE(fh.size() == 2);
  CHECK(fh[0].prime == 3);
  CHECK(fh[0].exponent == 2);
  CHECK(fh[1].prime == huge_prime);
}

TEST_CASE("factorize: reconstruction property on a deterministic grid") {
  for (int128 n : {int128{2}, int128{360}, int128{1031 * 1031}, int128{999983},
                   int128{1} << 62, (int128{1} << 62) - 1, int128{6ll * 999983 * 999979}}) {
    const FactorList f = factorize(n);
    int128 prod = 1;
    int128 last = 0;
    for (const Factor& x : f) {
      CHECK(x.prime > last);
      CHECK(x.exponent >= 1);
      CHECK(is_prime(static_cast<uint128>(x.prime)));
      last = x.prime;
      for (int e = 0; e < x.exponent; ++e) prod *= x.prime;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("squarefree and square detection") {
  CHECK(is_squarefree(-2));
  CHECK(is_squarefree(1));
  CHECK(is_squarefree(-1));
  CHECK(is_squarefree(51));
  CHECK_FALSE(is_squarefree(4));
  CHECK_FALSE(is_squarefree(-12));
  CHECK_THROWS_AS(is_squarefree(0), std::invalid_argument);

  CHECK(is_perfect_square(0));
  CHECK(is_perfect_square(49));
  CHECK_FALSE(is_perfect_square(50));
  CHECK_FALSE(is_perfect_square(-49));
  const int128 big = int128{1000000007} * 1000000007;
  CHECK(is_perfect_square(big));
  CHECK_FALSE(is_perfect_square(big + 1));
}

TEST_CASE("tau_of") {
  CHECK(tau_of(1) == 1);
  CHECK(tau_of(10) == 4);
  CHECK(tau_of(625) == 5);
  CHECK(tau_of(2 * 3 * 5 * 7) == 16);
  CHECK_THROWS_AS(tau_of(0), std::invalid_argument);
}

TEST_CASE("squarefree harmonic sum and count") {
  const SieveTables t = build_sieves(100'000);
  CHECK(squarefree_harmonic_sum(t, 1.0) == 1.0);
  CHECK(squarefree_harmonic_sum(t, 4.0) == doctest::Approx(1.0 + 0.5 + 1.0 / 3.0).epsilon(1e-15));
  CHECK(squarefree_count(t, 10.0) == 7);  // 1,2,3,5,6,7,10
  CHECK(squarefree_count(t, 1.0) == 1);
  CHECK_THROWS_AS(squarefree_harmonic_sum(t, 1e9), std::out_of_range);
  CHECK_THROWS_AS(squarefree_count(t, 0.5), std::invalid_argument);
}

TEST_CASE("explicit harmonic bound dominates up to 1e5; count bound on [1000,1700)") {
  const SieveTables t = build_sieves(100'000);
  double sum = 0.0, comp = 0.0;
  int64_t count = 0;
  const double log_coef = 6.0 / (4.0 * std::atan(1.0) * 4.0 * std::atan(1.0));  // 6/pi^2
  for (int64_t x = 1; x <= 100'000; ++x) {
    if (t.mu_at(x) != 0) {
      const double term = 1.0 / static_cast<double>(x) - comp;
      const double next = sum + term;
      comp = (next - sum) - term;
      sum = next;
      ++count;
    }
    CHECK(sum <= log_coef * std::log(static_cast<double>(x)) + 1.166);
    if (x >= 1000 && x < 1700) CHECK(static_cast<double>(count) <= 0.62 * static_cast<double>(x));
  }
}

TEST_CASE("sqrt_mod: all residues for primes below 500, both branches") {
  const SieveTables t = build_sieves(500);
  for (int64_t p = 3; p <= 499; p += 2) {
    if (t.tau_at(p) != 2) continue;  // primes only
    for (int64_t a = 1; a < p; ++a) {
      if (jacobi(a, p) != 1) continue;
      const uint64_t r = sqrt_mod(static_cast<uint64_t>(a), static_cast<uint64_t>(p));
      CHECK(static_cast<int64_t>(r * r % static_cast<uint64_t>(p)) == a);
      CHECK(r <= static_cast<uint64_t>(p) - r);  // smaller root
    }
  }
  CHECK(sqrt_mod(0, 7) == 0);
  CHECK_THROWS_AS(sqrt_mod(3, 7), std::invalid_argument);  // (3/7) = -1
}

TEST_CASE("modular helpers") {
  CHECK(mulmod_u64(UINT64_MAX - 1, UINT64_MAX - 2, UINT64_MAX) == 2);
  CHECK(powmod_u64(2, 64, 1000000007) == 582344008ull);
  CHECK(powmod_u64(3, 1000000006, 1000000007) == 1);  // Fermat
  CHECK(powmod_u64(5, 0, 11) == 1);
  CHECK(powmod_u64(5, 3, 1) == 0);
}

TEST_CASE("int128 utilities") {
  CHECK(to_string(int128{0}) == "0");
  CHECK(to_string(int128{-1}) == "-1");
  CHECK(to_string((int128{1} << 100)) == "1267650600228229401496703205376");
  CHECK(isqrt64(0) == 0);
  CHECK(isqrt64(15) == 3);
  CHECK(isqrt64(16) == 4);
  CHECK(isqrt64(UINT64_MAX) == 4294967295ull);
  const uint128 s = uint128{3037000499ull} * 3037000499ull;
  CHECK(isqrt128(s) == 3037000499ull);
  CHECK(isqrt128(s - 1) == 3037000498ull);
  CHECK_THROWS_AS(isqrt(int128{-1}), std::domain_error);
  CHECK_THROWS_AS(checked_mul(int128{1} << 100, int128{1} << 30), std::overflow_error);
}
