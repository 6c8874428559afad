#include "divsum/quadratic.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "divsum/arith.hpp"

namespace divsum {

QuadraticPoly make_poly(int64_t b, int64_t c) {
  QuadraticPoly p;
  p.b = b;
  p.c = c;

  const int128 delta_wide = checked_mul(b, b) - static_cast<int128>(c);
  if (delta_wide > INT64_MAX || delta_wide < INT64_MIN)
    throw std::overflow_error("make_poly: discriminant does not fit 64 bits");
  p.delta = static_cast<int64_t>(delta_wide);

  const int64_t abs_b = std::abs(b);
  const int64_t abs_c = std::abs(c);
  p.xi = std::sqrt(1.0 + 2.0 * static_cast<double>(abs_b) + static_cast<double>(abs_c));

  // ceil(sqrt(|c|)) by integer square root, never by float rounding
  const auto root = static_cast<int64_t>(isqrt64(static_cast<uint64_t>(abs_c)));
  const int64_t ceil_sqrt_c = root * root == abs_c ? root : root + 1;
  p.a_shift = std::max<int64_t>({abs_b, ceil_sqrt_c, 1});
  return p;
}

HypothesisReport check_hypotheses(const QuadraticPoly& p) {
  HypothesisReport r;
  r.delta_nonzero = p.delta != 0;
  r.delta_squarefree = p.delta != 0 && is_squarefree(p.delta);
  r.delta_not_1_mod_4 = ((p.delta % 4) + 4) % 4 != 1;
  r.positive_nondecreasing = p.b >= -1 && eval_f(p, 1) > 0;
  r.all_satisfied =
      r.delta_nonzero && r.delta_squarefree && r.delta_not_1_mod_4 && r.positive_nondecreasing;
  return r;
}

int128 eval_f(const QuadraticPoly& p, int64_t n) {
  if (n < 1) throw std::invalid_argument("eval_f: n must be >= 1");
  const int128 shifted = checked_add(n, p.b);
  return checked_add(checked_mul(shifted, shifted), -static_cast<int128>(p.delta));
}

}  // namespace divsum
