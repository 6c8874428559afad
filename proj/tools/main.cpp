// divsum: explicit divisor-sum bounds for quadratic polynomials n^2+2bn+c.
//
// Subcommands:
//   constants  constants (kappa, xi, A) -> (C1, C2, C3) for one polynomial
//   table      the five built-in example polynomials with their constants
//   verify     exact sums vs a chosen bound, every N up to --n-max
//   charsum    character partial sums X(N) against the cap kappa
//   rho-check  brute/closed/convolved root-count agreement up to --d-max
//   sweep      verification records at a list of N values
//
// Exit codes: 0 all checked inequalities hold; 1 a checked inequality
// failed; 2 usage or hypothesis error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divsum/arith.hpp"
#include "divsum/bounds.hpp"
#include "divsum/character.hpp"
#include "divsum/divisor_sum.hpp"
#include "divsum/quadratic.hpp"
#include "divsum/rho.hpp"
#include "divsum/table.hpp"

namespace {

enum class Format { human, tsv, csv };

struct GlobalOpts {
  Format format = Format::human;
  std::string out_path;
  int64_t work_limit_mb = 2048;
};

std::string fmt_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_sig4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// the example-table eyeball format: two decimals below 100, integers above
std::string fmt_display(double v) {
  char buf[64];
  if (std::abs(v) < 100.0)
    std::snprintf(buf, sizeof buf, "%.2f", v);
  else
    std::snprintf(buf, sizeof buf, "%.0f", v);
  return buf;
}

struct OutTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render(const OutTable& t, Format f) {
  std::string out;
  const char sep = f == Format::csv ? ',' : '\t';
  if (f == Format::tsv || f == Format::csv) {
    auto emit = [&](const std::vector<std::string>& cells) {
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += sep;
        out += cells[i];
      }
      out += '\n';
    };
    emit(t.header);
    for (const auto& r : t.rows) emit(r);
    return out;
  }
  // human: pad to column widths, first column left-aligned
  std::vector<size_t> width(t.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], cells[i].size());
  };
  grow(t.header);
  for (const auto& r : t.rows) grow(r);
  auto emit = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      const size_t w = i < width.size() ? width[i] : cells[i].size();
      if (i == 0) {
        out += cells[i];
        if (i + 1 < cells.size()) out.append(w - cells[i].size(), ' ');
      } else {
        out.append(w - cells[i].size(), ' ');
        out += cells[i];
      }
    }
    out += '\n';
  };
  emit(t.header);
  for (const auto& r : t.rows) emit(r);
  return out;
}

int write_output(const std::string& payload, const GlobalOpts& g) {
  std::fwrite(payload.data(), 1, payload.size(), stdout);
  if (!g.out_path.empty()) {
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << g.out_path << " for writing\n";
      return 2;
    }
    f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  }
  return 0;
}

divsum::WorkLimits limits_from(const GlobalOpts& g) {
  divsum::WorkLimits lim;
  lim.max_memory_bytes = static_cast<std::size_t>(g.work_limit_mb) << 20;
  return lim;
}

std::vector<int64_t> decade_marks(int64_t lo, int64_t hi) {
  std::vector<int64_t> marks;
  for (int64_t n = 1; n <= hi; n *= 10)
    if (n >= lo) marks.push_back(n);
  if (marks.empty() || marks.back() != hi) marks.push_back(hi);
  return marks;
}

const char* bound_name(divsum::BoundKind k) {
  switch (k) {
    case divsum::BoundKind::theorem1: return "theorem1";
    case divsum::BoundKind::sqrtf: return "sqrtf";
    case divsum::BoundKind::theorem2: return "theorem2";
    case divsum::BoundKind::refined: return "refined";
  }
  return "?";
}

double bound_value(divsum::BoundKind k, const divsum::BoundConstants& bc,
                   const divsum::QuadraticPoly& p, int64_t n) {
  switch (k) {
    case divsum::BoundKind::theorem1: return divsum::theorem1_bound(bc, n);
    case divsum::BoundKind::sqrtf: return divsum::sqrtF_bound(p, n);
    case divsum::BoundKind::theorem2: return divsum::theorem2_bound(n);
    case divsum::BoundKind::refined: return divsum::refined_bound(n);
  }
  return 0.0;
}

int cmd_constants(const GlobalOpts& g, int64_t b, int64_t c, bool allow_nonpositive) {
  const divsum::QuadraticPoly p = divsum::make_poly(b, c);
  const divsum::BoundConstants bc = divsum::constants_for(p, allow_nonpositive);

  OutTable t;
  if (g.format == Format::human) {
    t.header = {"quantity", "value", "full"};
    auto push = [&](const std::string& name, double v) {
      t.rows.push_back({name, fmt_sig4(v), fmt_full(v)});
    };
    t.rows.push_back({"b", std::to_string(b), std::to_string(b)});
    t.rows.push_back({"c", std::to_string(c), std::to_string(c)});
    t.rows.push_back({"delta", std::to_string(p.delta), std::to_string(p.delta)});
    push("kappa", bc.kappa);
    push("xi", bc.xi);
    t.rows.push_back({"a_shift", std::to_string(bc.a_shift), std::to_string(bc.a_shift)});
    push("c1", bc.c1);
    push("c2", bc.c2);
    push("c3", bc.c3);
  } else {
    t.header = {"b", "c", "delta", "kappa", "xi", "a_shift", "c1", "c2", "c3"};
    t.rows.push_back({std::to_string(b), std::to_string(c), std::to_string(p.delta),
                      fmt_full(bc.kappa), fmt_full(bc.xi), std::to_string(bc.a_shift),
                      fmt_full(bc.c1), fmt_full(bc.c2), fmt_full(bc.c3)});
  }
  std::string payload = render(t, g.format);
  if (g.format == Format::human && !divsum::check_hypotheses(p).positive_nondecreasing)
    payload += "note: f(n) <= 0 for small n; constants only, exact sums start later\n";
  return write_output(payload, g);
}

int cmd_table(const GlobalOpts& g) {
  const auto rows = divsum::example_table();
  OutTable t;
  t.header = {"polynomial", "delta", "c1", "c2", "c3", "empirical", "note"};
  const bool human = g.format == Format::human;
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    cells.push_back(r.polynomial);
    cells.push_back(std::to_string(r.delta));
    for (double v : {r.c1, r.c2, r.c3}) cells.push_back(human ? fmt_display(v) : fmt_full(v));
    if (r.has_empirical) {
      char buf[64];
      if (human)
        std::snprintf(buf, sizeof buf, "%.4f", r.empirical_ratio);
      else
        std::snprintf(buf, sizeof buf, "%.17g", r.empirical_ratio);
      cells.push_back(buf);
    } else {
      cells.push_back("-");
    }
    cells.push_back(r.note);
    t.rows.push_back(std::move(cells));
  }
  return write_output(render(t, g.format), g);
}

int cmd_verify(const GlobalOpts& g, int64_t b, int64_t c, int64_t n_max,
               divsum::BoundKind kind) {
  const divsum::QuadraticPoly p = divsum::make_poly(b, c);
  const divsum::WorkLimits lim = limits_from(g);

  if ((kind == divsum::BoundKind::theorem2 || kind == divsum::BoundKind::refined) &&
      (b != 0 || c != 1))
    throw std::invalid_argument("the sharpened bounds apply to n^2 + 1 only");
  const int64_t n_start = kind == divsum::BoundKind::refined ? 1000 : 1;
  if (n_max < n_start) throw std::invalid_argument("n-max below the bound's validity range");

  // one sieve run; margins checked at every admissible N, rows at decades
  const auto values = divsum::sieve_tau_values(p, n_max, lim);

  divsum::BoundConstants bc{};
  if (kind == divsum::BoundKind::theorem1) bc = divsum::constants_for(p);

  const auto marks = decade_marks(n_start, n_max);
  size_t next_mark = 0;

  OutTable t;
  t.header = {"N", "exact", "bound", "margin", "ratio"};
  int64_t exact = 0;
  int64_t violations = 0;
  for (int64_t n = 1; n <= n_max; ++n) {
    exact += values[static_cast<size_t>(n)];
    if (n < n_start) continue;
    const double bound = bound_value(kind, bc, p, n);
    const double margin = bound - static_cast<double>(exact);
    if (margin <= 0.0) ++violations;
    if (next_mark < marks.size() && marks[next_mark] == n) {
      ++next_mark;
      const double ratio = n >= 2 ? static_cast<double>(exact) /
                                        (static_cast<double>(n) * std::log(static_cast<double>(n)))
                                  : 0.0;
      t.rows.push_back({std::to_string(n), std::to_string(exact), fmt_full(bound),
                        fmt_full(margin), fmt_full(ratio)});
    }
  }

  std::string payload = render(t, g.format);
  if (g.format == Format::human) {
    payload += "bound: ";
    payload += bound_name(kind);
    payload += violations == 0 ? "; all margins positive for N in [" +
                                     std::to_string(n_start) + ", " + std::to_string(n_max) + "]\n"
                               : "; VIOLATED at " + std::to_string(violations) + " values of N\n";
  }
  const int rc = write_output(payload, g);
  if (rc != 0) return rc;
  return violations == 0 ? 0 : 1;
}

int cmd_charsum(const GlobalOpts& g, int64_t delta, int64_t n_max) {
  const divsum::RealCharacter ch = divsum::make_character(delta);
  const double cap = divsum::kappa(delta);
  const double harmonic_cap = std::log(cap) + 2.0;

  const auto max_ps = divsum::max_abs_partial_sum(ch, n_max);
  bool harmonic_ok = true;

  OutTable t;
  t.header = {"N", "X_N", "kappa", "slack", "harmonic_sum", "harmonic_bound"};
  const auto marks = decade_marks(1, n_max);
  size_t next_mark = 0;
  double hsum = 0.0, comp = 0.0;
  for (int64_t n = 1; n <= n_max; ++n) {
    const int v = ch.chi_at(n);
    if (v != 0) {
      const double term = static_cast<double>(v) / static_cast<double>(n) - comp;
      const double next = hsum + term;
      comp = (next - hsum) - term;
      hsum = next;
    }
    if (hsum >= harmonic_cap) harmonic_ok = false;
    if (next_mark < marks.size() && marks[next_mark] == n) {
      ++next_mark;
      const int64_t x = divsum::partial_sum(ch, n);
      t.rows.push_back({std::to_string(n), std::to_string(x), fmt_full(cap),
                        fmt_full(cap - std::abs(static_cast<double>(x))), fmt_full(hsum),
                        fmt_full(harmonic_cap)});
    }
  }

  const bool ok = max_ps.value < cap && harmonic_ok;
  std::string payload = render(t, g.format);
  if (g.format == Format::human) {
    payload += "max|X| = " + std::to_string(max_ps.value) + " at N = " +
               std::to_string(max_ps.argmax) + (max_ps.value < cap ? " < " : " >= ") +
               "kappa = " + fmt_sig4(cap) + "\n";
    payload += std::string("harmonic sums ") + (harmonic_ok ? "stay below" : "REACH") +
               " ln(kappa) + 2 = " + fmt_sig4(harmonic_cap) + "\n";
  }
  const int rc = write_output(payload, g);
  if (rc != 0) return rc;
  return ok ? 0 : 1;
}

int cmd_rho_check(const GlobalOpts& g, int64_t b, int64_t c, int64_t d_max) {
  const divsum::QuadraticPoly p = divsum::make_poly(b, c);
  const divsum::RealCharacter ch = divsum::make_character(p.delta);
  int64_t mismatches = 0;
  int64_t first_bad = 0;
  for (int64_t d = 1; d <= d_max; ++d) {
    const auto triple = divsum::rho_triple(p, ch, d);
    if (!triple.agree()) {
      if (mismatches == 0) first_bad = d;
      ++mismatches;
    }
  }
  OutTable t;
  t.header = {"d_max", "mismatches"};
  t.rows.push_back({std::to_string(d_max), std::to_string(mismatches)});
  std::string payload;
  if (g.format == Format::human) {
    payload = std::to_string(mismatches) + " mismatches / " + std::to_string(d_max) + "\n";
    if (mismatches > 0) payload += "first mismatch at d = " + std::to_string(first_bad) + "\n";
  } else {
    payload = render(t, g.format);
  }
  const int rc = write_output(payload, g);
  if (rc != 0) return rc;
  return mismatches == 0 ? 0 : 1;
}

int cmd_sweep(const GlobalOpts& g, int64_t b, int64_t c, std::vector<int64_t> ns,
              divsum::BoundKind kind) {
  const divsum::QuadraticPoly p = divsum::make_poly(b, c);
  const auto records = divsum::verify(p, ns, kind, limits_from(g));
  OutTable t;
  t.header = {"N", "exact", "bound", "margin", "ratio"};
  for (const auto& r : records)
    t.rows.push_back({std::to_string(r.n_upper), std::to_string(r.exact), fmt_full(r.bound),
                      fmt_full(r.margin), fmt_full(r.ratio)});
  return write_output(render(t, g.format), g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit divisor-sum bounds for quadratic polynomials"};
  app.require_subcommand(1);

  GlobalOpts g;
  std::map<std::string, Format> format_names{
      {"human", Format::human}, {"tsv", Format::tsv}, {"csv", Format::csv}};
  app.add_option("--format", g.format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
      ->default_val("human");
  app.add_option("--out", g.out_path, "also write the output bytes to this file");
  app.add_option("--work-limit-mb", g.work_limit_mb, "memory ceiling for sieve runs")
      ->default_val(2048);

  std::map<std::string, divsum::BoundKind> bound_names{
      {"theorem1", divsum::BoundKind::theorem1},
      {"sqrtf", divsum::BoundKind::sqrtf},
      {"theorem2", divsum::BoundKind::theorem2},
      {"refined", divsum::BoundKind::refined}};

  int64_t b = 0, c = 0, n_max = 0, d_max = 0, delta = 0;
  bool allow_nonpositive = false;
  std::vector<int64_t> ns;
  auto kind = divsum::BoundKind::theorem1;

  auto* constants = app.add_subcommand("constants", "bound constants for one polynomial");
  constants->add_option("--b", b, "linear half-coefficient")->required();
  constants->add_option("--c", c, "constant term")->required();
  constants->add_flag("--allow-nonpositive", allow_nonpositive,
                      "compute constants even if f(n) <= 0 for small n");

  auto* table = app.add_subcommand("table", "constants for the built-in example polynomials");

  auto* verify = app.add_subcommand("verify", "exact sums against a bound, all N <= n-max");
  verify->add_option("--b", b)->required();
  verify->add_option("--c", c)->required();
  verify->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
  verify->add_option("--bound", kind, "bound to check")
      ->transform(CLI::CheckedTransformer(bound_names, CLI::ignore_case))
      ->default_val("theorem1");

  auto* charsum = app.add_subcommand("charsum", "character partial sums against kappa");
  charsum->add_option("--delta", delta)->required();
  charsum->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);

  auto* rho_check = app.add_subcommand("rho-check", "triple agreement of the root counts");
  rho_check->add_option("--b", b)->required();
  rho_check->add_option("--c", c)->required();
  rho_check->add_option("--d-max", d_max)->required()->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "verification records at chosen N values");
  sweep->add_option("--b", b)->required();
  sweep->add_option("--c", c)->required();
  sweep->add_option("--n", ns, "N values (repeat or comma-separate)")
      ->required()
      ->delimiter(',');
  sweep->add_option("--bound", kind, "bound to check")
      ->transform(CLI::CheckedTransformer(bound_names, CLI::ignore_case))
      ->default_val("theorem1");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*constants) return cmd_constants(g, b, c, allow_nonpositive);
    if (*table) return cmd_table(g);
    if (*verify) return cmd_verify(g, b, c, n_max, kind);
    if (*charsum) return cmd_charsum(g, delta, n_max);
    if (*rho_check) return cmd_rho_check(g, b, c, d_max);
    if (*sweep) return cmd_sweep(g, b, c, std::move(ns), kind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
