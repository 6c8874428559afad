#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divsum/bounds.hpp"

// The built-in example table: five quadratics spanning the admissible
// discriminant shapes (delta = -1, -2, -6, -30, 51), each with its
// (C1, C2, C3) triple. For rows where the exact sum is computable from
// n = 1 the table also reports the measured ratio S(N) / (N ln N) at
// N = 10^5 - labeled empirical, not an asymptotic constant.

namespace divsum {

struct TableRow {
  std::string polynomial;  // e.g. "n^2+10n+27"
  int64_t b = 0;
  int64_t c = 0;
  int64_t delta = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  bool has_empirical = false;
  double empirical_ratio = 0.0;  // S(1e5) / (1e5 * ln 1e5) when has_empirical
  std::string note;              // nonempty when a hypothesis needs flagging
};

std::vector<QuadraticPoly> example_polynomials();

// ratio_n is the sieve size for the empirical column.
std::vector<TableRow> example_table(int64_t ratio_n = 100'000);

}  // namespace divsum
