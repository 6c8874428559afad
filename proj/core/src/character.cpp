#include "divsum/character.hpp"

#include <cmath>
#include <numbers>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "divsum/arith.hpp"

namespace divsum {

RealCharacter make_character(int64_t delta) {
  if (delta == 0) throw std::invalid_argument("make_character: delta must be nonzero");
  if (((delta % 4) + 4) % 4 == 1)
    throw std::invalid_argument("make_character: delta = 1 (mod 4) is not admissible");
  if (!is_squarefree(delta))
    throw std::invalid_argument("make_character: delta must be squarefree");

  RealCharacter ch;
  ch.delta = delta;
  ch.conductor_q = 4 * std::abs(delta);
  const int64_t q = ch.conductor_q;
  const int64_t two_delta = 2 * std::abs(delta);

  ch.period_values.resize(static_cast<size_t>(q));
  ch.prefix.assign(static_cast<size_t>(q) + 1, 0);
  for (int64_t n = 0; n < q; ++n) {
    const int value = std::gcd(n, two_delta) > 1 ? 0 : jacobi(delta, n);
    const int cross = kronecker(4 * delta, n);
    if (value != cross)
      throw std::logic_error("make_character: Jacobi and Kronecker realizations disagree at n=" +
                             std::to_string(n));
    ch.period_values[static_cast<size_t>(n)] = static_cast<int8_t>(value);
    if (n >= 1) ch.prefix[static_cast<size_t>(n)] = ch.prefix[static_cast<size_t>(n - 1)] + value;
  }
  ch.prefix[static_cast<size_t>(q)] = ch.prefix[static_cast<size_t>(q - 1)];
  if (ch.prefix[static_cast<size_t>(q)] != 0)
    throw std::logic_error("make_character: period does not sum to zero");
  return ch;
}

int64_t partial_sum(const RealCharacter& ch, int64_t n_upper) {
  if (n_upper < 0) throw std::invalid_argument("partial_sum: N must be >= 0");
  // full periods contribute nothing
  return ch.prefix[static_cast<size_t>(n_upper % ch.conductor_q)];
}

bool is_primitive(const RealCharacter& ch) {
  const int64_t q = ch.conductor_q;
  for (int64_t d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool period_d = true;
    for (int64_t n = 0; n < q && period_d; ++n) {
      if (std::gcd(n, q) != 1 || std::gcd(n + d, q) != 1) continue;
      if (ch.chi_at(n) != ch.chi_at(n + d)) period_d = false;
    }
    if (period_d) return false;
  }
  return true;
}

double g_of(double q) {
  if (q < 1.0) throw std::invalid_argument("g_of: q must be >= 1");
  const double root = std::sqrt(q);
  return 0.5 * root * std::log(q) + 1.2 * root;
}

double kappa(int64_t delta) {
  if (delta == 0) throw std::invalid_argument("kappa: delta must be nonzero");
  return g_of(4.0 * std::abs(static_cast<double>(delta)));
}

double qiu_rhs(int64_t q, int64_t n_upper) {
  if (q < 1 || n_upper < 1) throw std::invalid_argument("qiu_rhs: q and N must be >= 1");
  const double root = std::sqrt(static_cast<double>(q));
  const double g = static_cast<double>(std::gcd(n_upper, q));
  constexpr double four_over_pi_sq = 4.0 / (std::numbers::pi * std::numbers::pi);
  return four_over_pi_sq * root * std::log(static_cast<double>(q)) + 0.38 * root + 0.608 / root +
         0.116 * g * g / (root * static_cast<double>(q));
}

double qiu_rhs_trivial(int64_t q) {
  if (q < 1) throw std::invalid_argument("qiu_rhs_trivial: q must be >= 1");
  const double root = std::sqrt(static_cast<double>(q));
  constexpr double four_over_pi_sq = 4.0 / (std::numbers::pi * std::numbers::pi);
  // (N,q)^2 <= q^2 turns the gcd term into 0.116 sqrt(q)
  return four_over_pi_sq * root * std::log(static_cast<double>(q)) + 0.496 * root + 0.608 / root;
}

double chain_k(double x) {
  if (x < 1.0) throw std::invalid_argument("chain_k: x must be >= 1");
  return 0.812 * x * std::log(x) + 0.496 * x + 0.608 / x;
}

MaxPartialSum max_abs_partial_sum(const RealCharacter& ch, int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("max_abs_partial_sum: N must be >= 1");
  MaxPartialSum best;
  const int64_t scan_to = std::min(n_max, ch.conductor_q);  // X is q-periodic
  for (int64_t n = 1; n <= scan_to; ++n) {
    const auto v = static_cast<int64_t>(std::abs(ch.prefix[static_cast<size_t>(n)]));
    if (v > best.value) {
      best.value = v;
      best.argmax = n;
    }
  }
  return best;
}

double char_harmonic_sum(const RealCharacter& ch, double x) {
  if (x < 1.0) throw std::invalid_argument("char_harmonic_sum: x must be >= 1");
  const auto m_max = static_cast<int64_t>(x);
  double sum = 0.0, comp = 0.0;
  for (int64_t m = 1; m <= m_max; ++m) {
    const int v = ch.chi_at(m);
    if (v == 0) continue;
    const double term = static_cast<double>(v) / static_cast<double>(m) - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return sum;
}

double char_harmonic_bound(double kappa_value, double x) {
  if (x < 1.0) throw std::invalid_argument("char_harmonic_bound: x must be >= 1");
  if (x <= kappa_value) return 1.0 + std::log(x);
  return std::log(kappa_value) + 2.0;
}

}  // namespace divsum
