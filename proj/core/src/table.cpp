#include "divsum/table.hpp"

#include <cmath>

#include "divsum/divisor_sum.hpp"

namespace divsum {

namespace {

std::string render_poly(int64_t b, int64_t c) {
  std::string s = "n^2";
  const int64_t lin = 2 * b;
  if (lin > 0)
    s += "+" + std::to_string(lin) + "n";
  else if (lin < 0)
    s += std::to_string(lin) + "n";
  if (c > 0)
    s += "+" + std::to_string(c);
  else if (c < 0)
    s += std::to_string(c);
  return s;
}

}  // namespace

std::vector<QuadraticPoly> example_polynomials() {
  return {make_poly(0, 1), make_poly(5, 27), make_poly(2, 10), make_poly(26, 706),
          make_poly(5, -26)};
}

std::vector<TableRow> example_table(int64_t ratio_n) {
  std::vector<TableRow> rows;
  const double denom =
      static_cast<double>(ratio_n) * std::log(static_cast<double>(ratio_n));

  for (const QuadraticPoly& p : example_polynomials()) {
    TableRow row;
    row.polynomial = render_poly(p.b, p.c);
    row.b = p.b;
    row.c = p.c;
    row.delta = p.delta;

    if (p.b == 0 && p.c == 1) {
      // n^2+1 takes the sharpened bound: the mod-4 character keeps the
      // partial sums in {0, 1}, so the generic constants collapse
      const DerivedCoefficients d = theorem2_constants_derivation();
      row.c1 = d.coef_n_log_n;
      row.c2 = d.coef_n;
      row.c3 = 0.0;
    } else {
      const BoundConstants bc = constants_for(p, /*allow_nonpositive=*/true);
      row.c1 = bc.c1;
      row.c2 = bc.c2;
      row.c3 = bc.c3;
    }

    const HypothesisReport rep = check_hypotheses(p);
    if (rep.positive_nondecreasing) {
      row.has_empirical = true;
      row.empirical_ratio =
          static_cast<double>(exact_sum_sieve(p, ratio_n)) / denom;
    } else {
      // locate where f turns positive, for the flag text
      int64_t n = 1;
      while (eval_f(p, n) <= 0) ++n;
      row.note = "positivity hypothesis fails for n <= " + std::to_string(n - 1);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace divsum
