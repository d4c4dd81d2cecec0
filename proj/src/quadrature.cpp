#include "qdeform/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace qdeform {

namespace {

constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.0};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

bool rule(const std::function<double(double)>& f, double a, double b, Segment& s) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv1[7], fv2[7];
  const double fc = f(c);
  if (!std::isfinite(fc)) return false;
  double rk = fc * wgk[7], rg = fc * wg[3], rabs = std::abs(rk);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    fv1[j] = f(c - dx);
    fv2[j] = f(c + dx);
    if (!std::isfinite(fv1[j]) || !std::isfinite(fv2[j])) return false;
    rk += wgk[j] * (fv1[j] + fv2[j]);
    rabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) rg += wg[j / 2] * (fv1[j] + fv2[j]);
  }
  const double mean = 0.5 * rk;
  double asc = wgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) asc += wgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  const double ah = std::abs(h);
  double err = std::abs((rk - rg) * h);
  asc *= ah;
  rabs *= ah;
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (rabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * rabs, err);
  s = {a, b, rk * h, err};
  return true;
}

}  // namespace

Quadrature integrate(const std::function<double(double)>& f, double a, double b, double abs_tol, double rel_tol,
                     int max_intervals) {
  Quadrature out;
  if (a == b) {
    out.ok = true;
    return out;
  }
  if (!std::isfinite(a) || !std::isfinite(b)) return out;
  std::priority_queue<Segment> heap;
  Segment s;
  if (!rule(f, a, b, s)) return out;
  heap.push(s);
  double total = s.value, err = s.error;
  out.intervals = 1;
  while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (out.intervals >= max_intervals) {
      out.value = total;
      out.error = err;
      return out;
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left, right;
    if (!rule(f, worst.a, mid, left) || !rule(f, mid, worst.b, right)) {
      out.value = total;
      out.error = err;
      return out;
    }
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++out.intervals;
  }
  // re-sum to shed drift from incremental updates
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = total;
  out.error = err;
  out.ok = true;
  return out;
}

}  // namespace qdeform
