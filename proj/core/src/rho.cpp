#include "divsum/rho.hpp"

#include <stdexcept>
#include <string>

#include "divsum/arith.hpp"

namespace divsum {

namespace {

void require_delta_regime(const QuadraticPoly& p, const char* who) {
  if (p.delta == 0 || ((p.delta % 4) + 4) % 4 == 1 || !is_squarefree(p.delta))
    throw std::invalid_argument(std::string(who) +
                                ": requires squarefree delta with delta != 1 (mod 4)");
}

}  // namespace

int64_t rho_brute(const QuadraticPoly& p, int64_t d) {
  if (d < 1) throw std::invalid_argument("rho_brute: d must be >= 1");
  // f(m) = (m+b)^2 - delta; count (m+b)^2 = delta (mod d) over m in [0, d)
  const int64_t delta_mod = ((p.delta % d) + d) % d;
  const int64_t b_mod = ((p.b % d) + d) % d;
  int64_t count = 0;
  for (int64_t m = 0; m < d; ++m) {
    const int64_t x = (m + b_mod) % d;
    if (static_cast<int64_t>(static_cast<uint128>(x) * static_cast<uint128>(x) % d) == delta_mod)
      ++count;
  }
  return count;
}

int64_t rho_closed(const QuadraticPoly& p, int64_t d) {
  if (d < 1) throw std::invalid_argument("rho_closed: d must be >= 1");
  require_delta_regime(p, "rho_closed");
  int64_t result = 1;
  for (const Factor& f : factorize(d)) {
    const auto prime = static_cast<int64_t>(f.prime);
    int64_t local;
    if (prime == 2 || p.delta % prime == 0) {
      local = f.exponent == 1 ? 1 : 0;
    } else {
      local = 1 + jacobi(((p.delta % prime) + prime) % prime, prime);
    }
    if (local == 0) return 0;
    result *= local;
  }
  return result;
}

int64_t rho_convolved(const QuadraticPoly& p, const RealCharacter& ch, int64_t d) {
  if (d < 1) throw std::invalid_argument("rho_convolved: d must be >= 1");
  if (ch.delta != p.delta)
    throw std::invalid_argument("rho_convolved: character belongs to a different delta");
  int64_t sum = 0;
  for (int64_t l = 1; l * l <= d; ++l) {
    if (d % l != 0) continue;
    const int64_t m = d / l;
    sum += (is_squarefree(l) ? ch.chi_at(m) : 0);
    if (l != m) sum += (is_squarefree(m) ? ch.chi_at(l) : 0);
  }
  return sum;
}

int64_t rho_convolved(const QuadraticPoly& p, int64_t d) {
  return rho_convolved(p, make_character(p.delta), d);
}

RhoTriple rho_triple(const QuadraticPoly& p, const RealCharacter& ch, int64_t d) {
  return RhoTriple{d, rho_brute(p, d), rho_closed(p, d), rho_convolved(p, ch, d)};
}

int64_t sum_rho(const QuadraticPoly& p, double x) {
  if (x < 1.0) throw std::invalid_argument("sum_rho: x must be >= 1");
  const auto d_max = static_cast<int64_t>(x);
  int64_t sum = 0;
  for (int64_t d = 1; d <= d_max; ++d) sum += rho_closed(p, d);
  return sum;
}

double sum_rho_over_d(const QuadraticPoly& p, double x) {
  if (x < 1.0) throw std::invalid_argument("sum_rho_over_d: x must be >= 1");
  const auto d_max = static_cast<int64_t>(x);
  double sum = 0.0, comp = 0.0;
  for (int64_t d = 1; d <= d_max; ++d) {
    const double term =
        static_cast<double>(rho_closed(p, d)) / static_cast<double>(d) - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return sum;
}

}  // namespace divsum
