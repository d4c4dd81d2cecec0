#pragma once

#include <string>
#include <vector>

#include "qdeform/arith.hpp"
#include "qdeform/entropy.hpp"
#include "qdeform/ext_real.hpp"
#include "qdeform/numbers.hpp"

namespace qdeform {

// Inclusive linear grid; steps >= 2 and min < max, otherwise invalid_argument.
struct Grid {
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  void validate() const;
  std::vector<double> points() const;
};

struct Cell {
  bool is_text = false;
  std::string text;
  ExtReal number;

  Cell(std::string s) : is_text(true), text(std::move(s)) {}  // NOLINT
  Cell(const char* s) : is_text(true), text(s) {}             // NOLINT
  Cell(ExtReal v) : number(v) {}                              // NOLINT
  Cell(double v) : number(v) {}                               // NOLINT
};

// Rows in insertion order. CSV: header always, %.17g, inf/-inf/undefined tokens.
// JSON: array of objects with keys in column order.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::string csv() const;
  std::string json() const;
};

std::string format_number(const ExtReal& v);

// Default q panel.
inline const std::vector<double> default_qs = {-1.0, 0.5, 1.0, 2.0, 3.0};

// Region tag of deform(d, q, x): regular, cutoff, divergent or undefined.
std::string region(Deform d, QParam q, double x);

// class, q, x, value, region; ordered by class, q, then x.
Table numbers_table(const std::vector<Deform>& classes, const std::vector<double>& qs, const Grid& x);

// class, q, kind, x, limit. kind: vertical (value diverges past x), horizontal
// (value tends to limit as x -> +-inf or 0), cutoff (value is 0 for |x| <= x).
Table asymptote_table(const std::vector<Deform>& classes, const std::vector<double>& qs);

// kind, x, y, in_cutoff. Cells in x-major order, then border samples (kind
// "border", y on the analytic border, in_cutoff 1). Supports add and mul.
Table cutoff_map(Deform d, Op op, QParam q, const Grid& x, const Grid& y);

// Analytic oel-multiplication border |y| = (1 - |x|^(1-q))^(1/(1-q)); undefined where absent.
ExtReal mul_border(QParam q, double x);

// class, q, p, S for the distribution (p, 1-p).
Table two_state_table(const std::vector<Deform>& classes, const std::vector<double>& qs, const Grid& p);

// Distinct integers round(exp(t)) for t on a grid over [ln w.min, ln w.max].
std::vector<double> log_spaced_w(const Grid& w);

// class, q, W, lnW, S for W equiprobable states.
Table vs_w_table(const std::vector<Deform>& classes, const std::vector<double>& qs, const Grid& w);

// JSON array of admissibility reports.
std::string admissibility_json(const std::vector<Deform>& classes, const std::vector<double>& qs, int resolution);

}  // namespace qdeform
