#include "qdeform/datasets.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace qdeform {

void Grid::validate() const {
  if (steps < 2) throw std::invalid_argument("grid needs at least 2 steps");
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw std::invalid_argument("grid needs finite min < max");
  }
}

std::vector<double> Grid::points() const {
  validate();
  std::vector<double> v(steps);
  for (int i = 0; i < steps; ++i) v[i] = min + (max - min) * i / (steps - 1);
  v.back() = max;
  return v;
}

std::string format_number(const ExtReal& v) {
  switch (v.kind()) {
    case ExtReal::Kind::pos_inf: return "inf";
    case ExtReal::Kind::neg_inf: return "-inf";
    case ExtReal::Kind::undefined: return "undefined";
    case ExtReal::Kind::finite: break;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v.value());
  return buf;
}

std::string Table::csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i].is_text ? row[i].text : format_number(row[i].number);
    }
    out += '\n';
  }
  return out;
}

namespace {

nlohmann::ordered_json to_json(const ExtReal& v) {
  if (v.is_finite()) return v.value();
  return format_number(v);
}

nlohmann::ordered_json rows_json(const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      o[t.columns[i]] = row[i].is_text ? nlohmann::ordered_json(row[i].text) : to_json(row[i].number);
    }
    arr.push_back(std::move(o));
  }
  return arr;
}

std::string cls(Deform d) { return std::string(name(d)); }

}  // namespace

std::string Table::json() const { return rows_json(*this).dump(2) + "\n"; }

std::string region(Deform d, QParam q, double x) {
  const ExtReal v = deform(d, q, x);
  if (v.is_undefined()) return "undefined";
  if (!q.classical() && (d == Deform::ile || d == Deform::oel) && !(d == Deform::oel && x == 0.0) &&
      bracket(d, q, x) <= 0.0) {
    return q.below_one() ? "cutoff" : "divergent";
  }
  return v.is_finite() ? "regular" : "divergent";
}

Table numbers_table(const std::vector<Deform>& classes, const std::vector<double>& qs, const Grid& x) {
  Table t{{"class", "q", "x", "value", "region"}, {}};
  const std::vector<double> xs = x.points();
  for (Deform d : classes) {
    for (double qv : qs) {
      const QParam q(qv);
      for (double xv : xs) t.rows.push_back({cls(d), qv, xv, deform(d, q, xv), region(d, q, xv)});
    }
  }
  return t;
}

Table asymptote_table(const std::vector<Deform>& classes, const std::vector<double>& qs) {
  Table t{{"class", "q", "kind", "x", "limit"}, {}};
  const ExtReal pinf = ExtReal::pos_inf(), ninf = ExtReal::neg_inf();
  for (Deform d : classes) {
    for (double qv : qs) {
      const QParam q(qv);
      if (q.classical()) continue;
      const double a = 1.0 / q.omq();  // 1/(1-q)
      const bool lo = q.below_one();
      switch (d) {
        case Deform::ile:
          t.rows.push_back({cls(d), qv, "vertical", -a, lo ? ninf : pinf});
          break;
        case Deform::ole:
          t.rows.push_back({cls(d), qv, "horizontal", lo ? ninf : pinf, -a});
          break;
        case Deform::iel:
          if (lo) {
            t.rows.push_back({cls(d), qv, "horizontal", 0.0, std::exp(-a)});
          } else {
            t.rows.push_back({cls(d), qv, "horizontal", pinf, std::exp(-a)});
          }
          break;
        case Deform::oel:
          if (lo) {
            t.rows.push_back({cls(d), qv, "cutoff", std::exp(-a), 0.0});
          } else {
            t.rows.push_back({cls(d), qv, "vertical", std::exp(-a), pinf});
          }
          break;
      }
    }
  }
  return t;
}

ExtReal mul_border(QParam q, double x) {
  if (q.classical()) return ExtReal::undefined(Reason::no_element);
  const double omq = q.omq();
  const double base = -std::expm1(omq * std::log(std::abs(x)));  // 1 - |x|^(1-q)
  if (!(base >= 0.0)) return ExtReal::undefined(Reason::no_element);
  const double b = std::pow(base, 1.0 / omq);
  if (!std::isfinite(b)) return ExtReal::undefined(Reason::no_element);
  return b;
}

Table cutoff_map(Deform d, Op op, QParam q, const Grid& x, const Grid& y) {
  if (op != Op::add && op != Op::mul) throw std::invalid_argument("cutoff map supports add and mul");
  Table t{{"kind", "x", "y", "in_cutoff"}, {}};
  const std::vector<double> xs = x.points(), ys = y.points();
  for (double xv : xs) {
    for (double yv : ys) t.rows.push_back({"cell", xv, yv, in_cutoff(d, op, q, xv, yv) ? 1.0 : 0.0});
  }
  if (q.classical()) return t;
  const double omq = q.omq();
  const double edge = std::exp(-1.0 / omq);  // |s| at the bracket edge
  for (double xv : xs) {
    if (d == Deform::oel && op == Op::mul) {
      const ExtReal b = mul_border(q, xv);
      if (!b.is_finite()) continue;
      if (b.value() == 0.0) {
        t.rows.push_back({"border", xv, 0.0, 1.0});
      } else {
        for (double s : {-1.0, 1.0}) t.rows.push_back({"border", xv, s * b.value(), 1.0});
      }
    } else if (d == Deform::oel) {
      // iel(x) + iel(y) = +-edge
      const ExtReal cx = deform(Deform::iel, q, xv);
      if (!cx.is_finite()) continue;
      for (double s : {-1.0, 1.0}) {
        const ExtReal b = deform(Deform::oel, q, s * edge - cx.value());
        if (b.is_finite()) t.rows.push_back({"border", xv, b, 1.0});
      }
    } else if (d == Deform::ile) {
      // e^{(1-q)x} + e^{(1-q)y} - 1 = 0 (add), (e^{(1-q)x} - 1)(e^{(1-q)y} - 1) = -(1-q) (mul)
      const double ex = std::expm1(omq * xv);
      const double u = op == Op::add ? -1.0 - ex : -omq / ex;
      if (u > -1.0 && std::isfinite(u)) t.rows.push_back({"border", xv, std::log1p(u) / omq, 1.0});
    }
  }
  return t;
}

Table two_state_table(const std::vector<Deform>& classes, const std::vector<double>& qs, const Grid& p) {
  Table t{{"class", "q", "p", "S"}, {}};
  const std::vector<double> ps = p.points();
  for (double pv : ps) {
    if (pv < 0.0 || pv > 1.0) throw std::invalid_argument("two-state grid must lie in [0,1]");
  }
  for (Deform d : classes) {
    for (double qv : qs) {
      for (double pv : ps) {
        t.rows.push_back({cls(d), qv, pv, s_delta_closed(d, qv, Distribution({pv, 1.0 - pv}))});
      }
    }
  }
  return t;
}

std::vector<double> log_spaced_w(const Grid& w) {
  w.validate();
  if (w.min < 1.0) throw std::invalid_argument("W grid must start at 1 or above");
  std::vector<double> out;
  const double a = std::log(w.min), b = std::log(w.max);
  for (int i = 0; i < w.steps; ++i) {
    const double v = std::round(std::exp(a + (b - a) * i / (w.steps - 1)));
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  return out;
}

Table vs_w_table(const std::vector<Deform>& classes, const std::vector<double>& qs, const Grid& w) {
  Table t{{"class", "q", "W", "lnW", "S"}, {}};
  const std::vector<double> ws = log_spaced_w(w);
  for (Deform d : classes) {
    for (double qv : qs) {
      for (double wv : ws) {
        const Distribution u = Distribution::uniform(static_cast<std::size_t>(wv));
        t.rows.push_back({cls(d), qv, wv, std::log(wv), s_delta_closed(d, qv, u)});
      }
    }
  }
  return t;
}

std::string admissibility_json(const std::vector<Deform>& classes, const std::vector<double>& qs, int resolution) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (Deform d : classes) {
    for (double qv : qs) {
      const AdmissibilityReport r = admissibility_report(d, qv, resolution);
      nlohmann::ordered_json o;
      o["class"] = cls(d);
      o["q"] = qv;
      o["resolution"] = r.resolution;
      o["certainty"] = to_json(r.certainty);
      o["certainty_zero"] = r.certainty_zero;
      o["min_value"] = to_json(r.min_value);
      o["nonnegative"] = r.nonnegative;
      o["expansible"] = r.expansible;
      o["curvature"] = std::string(name(r.curvature));
      o["convex_points"] = r.convex_points;
      o["concave_points"] = r.concave_points;
      o["finite_points"] = r.finite_points;
      arr.push_back(std::move(o));
    }
  }
  return arr.dump(2) + "\n";
}

}  // namespace qdeform
