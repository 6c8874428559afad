#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "divsum/arith.hpp"
#include "divsum/divisor_sum.hpp"
#include "divsum/quadratic.hpp"

using namespace divsum;

TEST_CASE("exact_sum_naive: pinned values") {
  const QuadraticPoly p1 = make_poly(0, 1);
  CHECK(exact_sum_naive(p1, 1) == 2);                    // tau(2)
  CHECK(exact_sum_naive(p1, 3) == 8);                    // tau(2)+tau(5)+tau(10)
  CHECK(exact_sum_naive(p1, 10) == 32);
  CHECK(exact_sum_naive(p1, 100) == 536);
  CHECK(exact_sum_naive(p1, 1000) == 7508);

  CHECK(exact_sum_naive(make_poly(2, 10), 2) == 8);      // tau(15)+tau(22)
  CHECK(exact_sum_naive(make_poly(5, 27), 100) == 742);
  CHECK(exact_sum_naive(make_poly(26, 706), 10) == 74);

  CHECK_THROWS_AS(exact_sum_naive(make_poly(5, -26), 10), std::invalid_argument);
}

TEST_CASE("sieve equals naive for n^2 + 1 up to 1e4, element by element") {
  const QuadraticPoly p = make_poly(0, 1);
  const auto naive = naive_tau_values(p, 10'000);
  const auto sieve = sieve_tau_values(p, 10'000);
  REQUIRE(naive.size() == sieve.size());
  CHECK(naive == sieve);
  CHECK(exact_sum_sieve(p, 3) == 8);
}

TEST_CASE("sieve equals naive for the other positive rows up to 1e3") {
  for (const auto& [b, c] :
       std::vector<std::pair<int64_t, int64_t>>{{5, 27}, {2, 10}, {26, 706}}) {
    const QuadraticPoly p = make_poly(b, c);
    CHECK(naive_tau_values(p, 1000) == sieve_tau_values(p, 1000));
  }
}

TEST_CASE("hyperbola route agrees on the grid") {
  for (const auto& [b, c] : std::vector<std::pair<int64_t, int64_t>>{
           {0, 1}, {5, 27}, {2, 10}, {26, 706}}) {
    const QuadraticPoly p = make_poly(b, c);
    const auto naive = naive_tau_values(p, 1000);
    const auto hyper = hyperbola_tau_values_range(p, 1, 1000);
    for (int64_t n = 1; n <= 1000; ++n)
      CHECK(naive[static_cast<size_t>(n)] == hyper[static_cast<size_t>(n - 1)]);
  }
  CHECK(hyperbola_count(make_poly(0, 1), 3) == 8);
}

TEST_CASE("delta = 51 on its positive range, including the square at n = 21") {
  const QuadraticPoly p = make_poly(5, -26);
  // f(21) = 625 = 25^2: tau is odd and the hyperbola correction fires
  CHECK(eval_f(p, 21) == 625);
  CHECK(is_perfect_square(eval_f(p, 21)));
  const auto naive = naive_tau_values_range(p, 3, 500);
  const auto hyper = hyperbola_tau_values_range(p, 3, 500);
  CHECK(naive == hyper);
  CHECK(naive[21 - 3] == 5);  // tau(625)

  CHECK_THROWS_AS(hyperbola_tau_values_range(p, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(hyperbola_tau_values_range(p, 5, 4), std::invalid_argument);
}

TEST_CASE("delta = 2 (mod 4) rows never hit a perfect square") {
  for (const auto& [b, c] :
       std::vector<std::pair<int64_t, int64_t>>{{5, 27}, {2, 10}, {26, 706}}) {
    const QuadraticPoly p = make_poly(b, c);
    for (int64_t n = 1; n <= 10'000; ++n) CHECK_FALSE(is_perfect_square(eval_f(p, n)));
  }
}

TEST_CASE("sieve rejects invalid input and respects work limits") {
  CHECK_THROWS_AS(sieve_tau_values(make_poly(1, 0), 10), std::invalid_argument);   // delta = 1
  CHECK_THROWS_AS(sieve_tau_values(make_poly(5, -26), 10), std::invalid_argument); // positivity
  CHECK_THROWS_AS(sieve_tau_values(make_poly(0, 1), 0), std::invalid_argument);

  WorkLimits tiny_n;
  tiny_n.max_n = 100;
  CHECK_THROWS_AS(sieve_tau_values(make_poly(0, 1), 101, tiny_n), std::length_error);

  WorkLimits tiny_mem;
  tiny_mem.max_memory_bytes = 1024;
  CHECK_THROWS_AS(sieve_tau_values(make_poly(0, 1), 100'000, tiny_mem), std::length_error);
}

TEST_CASE("sieve output is bit-identical across thread and segment choices") {
  const QuadraticPoly p = make_poly(5, 27);
  WorkLimits serial;
  serial.threads = 1;
  serial.segment_size = 1 << 20;
  WorkLimits chopped;
  chopped.threads = 4;
  chopped.segment_size = 1024;
  WorkLimits odd_chop;
  odd_chop.threads = 3;
  odd_chop.segment_size = 1519;
  const auto a = sieve_tau_values(p, 30'000, serial);
  const auto b = sieve_tau_values(p, 30'000, chopped);
  const auto c = sieve_tau_values(p, 30'000, odd_chop);
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("verify: records, margins, and guards") {
  const QuadraticPoly p = make_poly(0, 1);

  const auto recs = verify(p, {1, 10, 100}, BoundKind::theorem2);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].exact == 2);
  CHECK(recs[1].exact == 32);
  CHECK(recs[2].exact == 536);
  for (const auto& r : recs) CHECK(r.margin > 0.0);
  CHECK(recs[0].ratio == 0.0);  // undefined at N = 1, reported as 0
  CHECK(recs[2].ratio ==
        doctest::Approx(536.0 / (100.0 * std::log(100.0))).epsilon(1e-15));

  // input order preserved
  const auto swapped = verify(p, {100, 10}, BoundKind::theorem2);
  CHECK(swapped[0].n_upper == 100);
  CHECK(swapped[1].n_upper == 10);

  // N = 1 under theorem1: bound collapses to C2 + C3
  const auto t1 = verify(p, {1}, BoundKind::theorem1);
  const BoundConstants bc = constants_for(p);
  CHECK(t1[0].bound == doctest::Approx(bc.c2 + bc.c3).epsilon(1e-15));
  CHECK(t1[0].exact == 2);

  CHECK_THROWS_AS(verify(p, {}, BoundKind::theorem2), std::invalid_argument);
  CHECK_THROWS_AS(verify(p, {0}, BoundKind::theorem2), std::invalid_argument);
  CHECK_THROWS_AS(verify(p, {500}, BoundKind::refined), std::invalid_argument);
  CHECK_THROWS_AS(verify(make_poly(5, 27), {10}, BoundKind::theorem2), std::invalid_argument);
  CHECK_THROWS_AS(verify(make_poly(5, -26), {10}, BoundKind::theorem1), std::invalid_argument);
  CHECK_NOTHROW(verify(make_poly(0, 1), {1000}, BoundKind::refined));
}

TEST_CASE("exact sums are strictly increasing in N") {
  const QuadraticPoly p = make_poly(2, 10);
  const auto values = sieve_tau_values(p, 5000);
  int64_t running = 0;
  for (int64_t n = 1; n <= 5000; ++n) {
    CHECK(values[static_cast<size_t>(n)] >= 1);
    running += values[static_cast<size_t>(n)];
  }
  CHECK(running == exact_sum_sieve(p, 5000));
}

TEST_CASE("ratio diagnostic decreases along decades toward the expected regime") {
  const QuadraticPoly p = make_poly(0, 1);
  const auto recs = verify(p, {1000, 10'000, 100'000, 1'000'000}, BoundKind::theorem2);
  for (size_t i = 1; i < recs.size(); ++i) CHECK(recs[i].ratio < recs[i - 1].ratio);
  // well above the n log n floor, well below the first decade's level
  CHECK(recs.back().ratio > 0.9);
  CHECK(recs.back().ratio < 1.1);
}
