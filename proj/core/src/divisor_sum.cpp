#include "divsum/divisor_sum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "divsum/arith.hpp"

namespace divsum {

namespace {

void require_valid(const QuadraticPoly& p, const char* who, bool need_positivity) {
  const HypothesisReport rep = check_hypotheses(p);
  if (!rep.delta_nonzero || !rep.delta_squarefree || !rep.delta_not_1_mod_4)
    throw std::invalid_argument(std::string(who) +
                                ": delta must be nonzero, squarefree and != 1 (mod 4)");
  if (need_positivity && !rep.positive_nondecreasing)
    throw std::invalid_argument(std::string(who) + ": f must be positive nondecreasing on n >= 1");
}

// positive and nondecreasing from n_lo onward
void require_positive_from(const QuadraticPoly& p, int64_t n_lo, const char* who) {
  if (n_lo < 1) throw std::invalid_argument(std::string(who) + ": range must start at n >= 1");
  if (2 * n_lo + 1 + 2 * p.b < 0 || eval_f(p, n_lo) <= 0)
    throw std::invalid_argument(std::string(who) + ": f must be positive on the range");
}

struct Progression {
  int64_t prime;
  int64_t root1;
  int64_t root2;  // -1 when the prime contributes a single residue class
};

std::vector<Progression> build_progressions(const QuadraticPoly& p, int64_t prime_limit) {
  std::vector<Progression> progs;
  if (prime_limit < 2) return progs;

  // plain bit sieve for the primes up to sqrt(f(N))
  const auto limit = static_cast<size_t>(prime_limit);
  std::vector<bool> composite(limit + 1, false);
  for (size_t i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (size_t j = i * i; j <= limit; j += i) composite[j] = true;

  // p = 2: (m+b)^2 = delta (mod 2) has the single root m = delta - b
  progs.push_back({2, (((p.delta - p.b) % 2) + 2) % 2, -1});

  for (int64_t q = 3; q <= prime_limit; q += 2) {
    if (composite[static_cast<size_t>(q)]) continue;
    const int64_t delta_mod = ((p.delta % q) + q) % q;
    if (delta_mod == 0) {
      // q | delta: single root -b, no lift (valuation is capped at 1)
      progs.push_back({q, (((-p.b) % q) + q) % q, -1});
      continue;
    }
    if (jacobi(delta_mod, q) != 1) continue;  // no roots
    const auto s = static_cast<int64_t>(sqrt_mod(static_cast<uint64_t>(delta_mod),
                                                 static_cast<uint64_t>(q)));
    const int64_t r1 = (((s - p.b) % q) + q) % q;
    const int64_t r2 = (((-s - p.b) % q) + q) % q;
    progs.push_back({q, r1, r2});
  }
  return progs;
}

void sieve_segment(const QuadraticPoly& poly, const std::vector<Progression>& progs, int64_t lo,
                   int64_t hi, std::vector<int64_t>& values, std::vector<uint32_t>& out) {
  const auto len = static_cast<size_t>(hi - lo + 1);
  for (size_t i = 0; i < len; ++i) {
    values[i] = static_cast<int64_t>(eval_f(poly, lo + static_cast<int64_t>(i)));
    out[static_cast<size_t>(lo) + i] = 1;
  }

  const auto walk = [&](int64_t prime, int64_t root) {
    int64_t start = lo + (((root - lo) % prime) + prime) % prime;
    for (int64_t n = start; n <= hi; n += prime) {
      int64_t& v = values[static_cast<size_t>(n - lo)];
      uint32_t e = 0;
      while (v % prime == 0) {
        v /= prime;
        ++e;
      }
      out[static_cast<size_t>(n)] *= e + 1;  // e >= 1: n lies on a root progression
    }
  };

  for (const Progression& pr : progs) {
    walk(pr.prime, pr.root1);
    if (pr.root2 >= 0 && pr.root2 != pr.root1) walk(pr.prime, pr.root2);
  }

  // every remaining cofactor exceeds sqrt(f(N)) and is therefore prime
  for (size_t i = 0; i < len; ++i)
    if (values[i] > 1) out[static_cast<size_t>(lo) + i] *= 2;
}

}  // namespace

std::vector<uint32_t> sieve_tau_values(const QuadraticPoly& p, int64_t n_upper,
                                       const WorkLimits& limits) {
  if (n_upper < 1) throw std::invalid_argument("sieve_tau_values: N must be >= 1");
  if (n_upper > limits.max_n)
    throw std::length_error("sieve_tau_values: N exceeds the configured work limit");
  require_valid(p, "sieve_tau_values", /*need_positivity=*/true);

  const int128 f_max = eval_f(p, n_upper);
  if (f_max > INT64_MAX) throw std::overflow_error("sieve_tau_values: f(N) exceeds 63 bits");
  const auto prime_limit = static_cast<int64_t>(isqrt64(static_cast<uint64_t>(f_max)));

  const int64_t segment = std::max<int64_t>(1024, limits.segment_size);
  const auto segment_count = static_cast<int>((n_upper + segment - 1) / segment);
  int threads = limits.threads > 0 ? limits.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, segment_count));

  // memory: output + per-thread value/count scratch + prime bitmap + progressions
  const std::size_t needed =
      (static_cast<std::size_t>(n_upper) + 1) * sizeof(uint32_t) +
      static_cast<std::size_t>(threads) * static_cast<std::size_t>(segment) *
          (sizeof(int64_t)) +
      static_cast<std::size_t>(prime_limit) / 8 +
      static_cast<std::size_t>(static_cast<double>(prime_limit) /
                               std::log(std::max(3.0, static_cast<double>(prime_limit))) * 1.2 +
                               64.0) *
          sizeof(Progression);
  if (needed > limits.max_memory_bytes)
    throw std::length_error("sieve_tau_values: run exceeds the configured memory ceiling");

  const std::vector<Progression> progs = build_progressions(p, prime_limit);
  std::vector<uint32_t> out(static_cast<size_t>(n_upper) + 1, 0);

  std::atomic<int> next_segment{0};
  auto worker = [&]() {
    std::vector<int64_t> values(static_cast<size_t>(segment));
    for (;;) {
      const int seg = next_segment.fetch_add(1);
      if (seg >= segment_count) break;
      const int64_t lo = 1 + static_cast<int64_t>(seg) * segment;
      const int64_t hi = std::min<int64_t>(n_upper, lo + segment - 1);
      sieve_segment(p, progs, lo, hi, values, out);
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

std::vector<uint32_t> naive_tau_values(const QuadraticPoly& p, int64_t n_upper) {
  if (n_upper < 1) throw std::invalid_argument("naive_tau_values: N must be >= 1");
  require_positive_from(p, 1, "naive_tau_values");
  std::vector<uint32_t> out(static_cast<size_t>(n_upper) + 1, 0);
  for (int64_t n = 1; n <= n_upper; ++n)
    out[static_cast<size_t>(n)] = static_cast<uint32_t>(tau_of(eval_f(p, n)));
  return out;
}

std::vector<uint32_t> naive_tau_values_range(const QuadraticPoly& p, int64_t n_lo, int64_t n_hi) {
  if (n_hi < n_lo) throw std::invalid_argument("naive_tau_values_range: empty range");
  require_positive_from(p, n_lo, "naive_tau_values_range");
  std::vector<uint32_t> out(static_cast<size_t>(n_hi - n_lo) + 1, 0);
  for (int64_t n = n_lo; n <= n_hi; ++n)
    out[static_cast<size_t>(n - n_lo)] = static_cast<uint32_t>(tau_of(eval_f(p, n)));
  return out;
}

std::vector<uint32_t> hyperbola_tau_values_range(const QuadraticPoly& p, int64_t n_lo,
                                                 int64_t n_hi) {
  if (n_hi < n_lo) throw std::invalid_argument("hyperbola_tau_values_range: empty range");
  require_positive_from(p, n_lo, "hyperbola_tau_values_range");
  std::vector<uint32_t> out(static_cast<size_t>(n_hi - n_lo) + 1, 0);
  for (int64_t n = n_lo; n <= n_hi; ++n) {
    const int128 f_wide = eval_f(p, n);
    if (f_wide > INT64_MAX)
      throw std::overflow_error("hyperbola_tau_values_range: f(n) exceeds 63 bits");
    const auto f = static_cast<int64_t>(f_wide);
    const auto root = static_cast<int64_t>(isqrt64(static_cast<uint64_t>(f)));
    uint32_t below_root = 0;
    for (int64_t d = 1; d <= root; ++d)
      if (f % d == 0) ++below_root;
    out[static_cast<size_t>(n - n_lo)] = 2 * below_root - (root * root == f ? 1 : 0);
  }
  return out;
}

int64_t exact_sum_naive(const QuadraticPoly& p, int64_t n_upper) {
  const auto values = naive_tau_values(p, n_upper);
  return std::accumulate(values.begin(), values.end(), int64_t{0});
}

int64_t exact_sum_sieve(const QuadraticPoly& p, int64_t n_upper, const WorkLimits& limits) {
  const auto values = sieve_tau_values(p, n_upper, limits);
  return std::accumulate(values.begin(), values.end(), int64_t{0});
}

int64_t hyperbola_count(const QuadraticPoly& p, int64_t n_upper) {
  return hyperbola_count_range(p, 1, n_upper);
}

int64_t hyperbola_count_range(const QuadraticPoly& p, int64_t n_lo, int64_t n_hi) {
  const auto values = hyperbola_tau_values_range(p, n_lo, n_hi);
  return std::accumulate(values.begin(), values.end(), int64_t{0});
}

std::vector<VerificationRecord> verify(const QuadraticPoly& p, const std::vector<int64_t>& ns,
                                       BoundKind kind, const WorkLimits& limits) {
  if (ns.empty()) throw std::invalid_argument("verify: no N values given");
  require_valid(p, "verify", /*need_positivity=*/true);
  if ((kind == BoundKind::theorem2 || kind == BoundKind::refined) && (p.b != 0 || p.c != 1))
    throw std::invalid_argument("verify: the sharpened bounds apply to n^2 + 1 only");
  for (int64_t n : ns) {
    if (n < 1) throw std::invalid_argument("verify: every N must be >= 1");
    if (kind == BoundKind::refined && n < 1000)
      throw std::invalid_argument("verify: the refined bound requires N >= 1000");
  }

  const int64_t n_max = *std::max_element(ns.begin(), ns.end());
  const auto values = sieve_tau_values(p, n_max, limits);

  // exact sums at the requested cut points, one pass
  std::vector<size_t> order(ns.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return ns[a] < ns[b]; });

  std::vector<VerificationRecord> records(ns.size());
  int64_t running = 0;
  int64_t n = 0;
  BoundConstants bc{};
  if (kind == BoundKind::theorem1) bc = constants_for(p);

  for (size_t idx : order) {
    const int64_t target = ns[idx];
    while (n < target) {
      ++n;
      running += values[static_cast<size_t>(n)];
    }
    VerificationRecord rec;
    rec.n_upper = target;
    rec.exact = running;
    switch (kind) {
      case BoundKind::theorem1: rec.bound = theorem1_bound(bc, target); break;
      case BoundKind::sqrtf: rec.bound = sqrtF_bound(p, target); break;
      case BoundKind::theorem2: rec.bound = theorem2_bound(target); break;
      case BoundKind::refined: rec.bound = refined_bound(target); break;
    }
    rec.margin = rec.bound - static_cast<double>(rec.exact);
    rec.ratio = target >= 2 ? static_cast<double>(rec.exact) /
                                  (static_cast<double>(target) * std::log(static_cast<double>(target)))
                            : 0.0;
    if (rec.margin <= 0.0)
      throw std::runtime_error("verify: bound violated at N = " + std::to_string(target));
    records[idx] = rec;
  }
  return records;
}

}  // namespace divsum
