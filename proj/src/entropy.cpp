#include "qdeform/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detail.hpp"
#include "qdeform/arith.hpp"
#include "qdeform/calculus.hpp"
#include "qdeform/qfun.hpp"

namespace qdeform {

Distribution::Distribution(std::vector<double> p, double k) : p_(std::move(p)), k_(k) {
  if (p_.empty()) throw std::invalid_argument("distribution needs at least one state");
  if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("k must be positive");
  for (double v : p_) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("probabilities must lie in [0,1]");
  }
  if (std::abs(neumaier_sum(p_) - 1.0) > 1e-12) throw std::invalid_argument("probabilities must sum to 1");
}

Distribution Distribution::uniform(std::size_t w, double k) {
  if (w == 0) throw std::invalid_argument("distribution needs at least one state");
  return Distribution(std::vector<double>(w, 1.0 / static_cast<double>(w)), k);
}

Distribution Distribution::with_zero() const {
  std::vector<double> p = p_;
  p.push_back(0.0);
  return Distribution(std::move(p), k_);
}

double neumaier_sum(const std::vector<double>& v) {
  double s = 0.0, c = 0.0;
  for (double x : v) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  return s + c;
}

namespace {

template <class F>
double sum_nonzero(const Distribution& d, F term) {
  std::vector<double> terms;
  terms.reserve(d.size());
  for (double p : d.probs()) {
    if (p > 0.0) terms.push_back(term(p));
  }
  return neumaier_sum(terms);
}

// Sum of ExtReal terms; the first non-finite term decides.
template <class F>
ExtReal sum_ext(const Distribution& d, F term) {
  std::vector<double> terms;
  ExtReal acc = 0.0;
  for (double p : d.probs()) {
    const ExtReal t = term(p);
    if (!t.is_finite()) {
      acc = acc + t;
      if (acc.is_undefined()) return acc;
    } else {
      terms.push_back(t.value());
    }
  }
  if (!acc.is_finite() || acc.value() != 0.0) return acc;
  return neumaier_sum(terms);
}

}  // namespace

double g(const Distribution& dist, double alpha) {
  if (alpha == 0.0) {
    return static_cast<double>(std::count_if(dist.probs().begin(), dist.probs().end(), [](double p) { return p > 0.0; }));
  }
  return sum_nonzero(dist, [alpha](double p) { return std::pow(p, alpha); });
}

namespace {

// g(alpha) - g(1)
double g_excess(const Distribution& dist, double alpha) {
  const double a = alpha - 1.0;
  return sum_nonzero(dist, [a](double p) { return p * std::expm1(a * std::log(p)); });
}

}  // namespace

double s1(const Distribution& dist) {
  return -dist.k() * sum_nonzero(dist, [](double p) { return p * std::log(p); }) + 0.0;
}

double s_tsallis(const Distribution& dist, QParam q) {
  if (q.classical()) return s1(dist);
  const double omq = q.omq(), qv = q.value();
  return -dist.k() * sum_nonzero(dist, [=](double p) { return std::pow(p, qv) * detail::lnq(omq, std::log(p)); }) + 0.0;
}

double renyi(const Distribution& dist, QParam q) {
  if (q.classical()) return s1(dist);
  return dist.k() * std::log1p(g_excess(dist, q.value())) / q.omq();
}

ExtReal jackson_d(const std::function<double(double)>& f, double Q, double x) {
  if (x == 0.0) return ExtReal::undefined(Reason::zero_argument);
  if (std::abs(Q - 1.0) <= classical_band) {
    return central_difference([&f](double t) { return ExtReal(f(t)); }, x).value;
  }
  return ExtReal(f(Q * x) - f(x)) / ExtReal(Q * x - x);
}

ExtReal s_via_jackson(const Distribution& dist, QParam q) {
  const double Q = q.value();
  if (std::abs(Q - 1.0) <= classical_band) {
    return ExtReal(-dist.k()) * jackson_d([&dist](double a) { return g(dist, a); }, Q, 1.0);
  }
  return ExtReal(-dist.k() * g_excess(dist, Q) / (Q - 1.0));
}

ExtReal g_delta(Deform d, QParam q, const Distribution& dist, double alpha) {
  ExtReal acc = 0.0;
  std::vector<double> terms;
  for (double p : dist.probs()) {
    const ExtReal t = tpow(d, q, p, alpha);
    if (!t.is_finite()) {
      acc = acc + t;
    } else {
      terms.push_back(t.value());
    }
  }
  if (!acc.is_finite() || acc.value() != 0.0) return acc;
  return neumaier_sum(terms);
}

namespace {

ExtReal s_delta_raw(Deform d, QParam q, const Distribution& dist) {
  if (q.classical()) return s1(dist);
  const double omq = q.omq(), k = dist.k();
  switch (d) {
    case Deform::ile:
      return ExtReal(k) * sum_ext(dist, [omq](double p) -> ExtReal {
               if (p == 0.0) return 0.0;
               return std::expm1(-omq * p) / omq * std::log(std::expm1(omq * p) / omq);
             });
    case Deform::ole:
      return ExtReal(-k) * sum_ext(dist, [omq](double p) -> ExtReal {
               if (p == 0.0) return 0.0;
               const ExtReal l = detail::log_bracket(omq, omq * p);
               return ExtReal(1.0 + omq * p) * l * ext::log(l);
             });
    case Deform::iel: {
      if (q.below_one() && std::any_of(dist.probs().begin(), dist.probs().end(), [](double p) { return p == 0.0; })) {
        return ExtReal::undefined(Reason::zero_argument);
      }
      return ExtReal(-k) * sum_ext(dist, [omq](double p) -> ExtReal {
               if (p == 0.0) return 0.0;
               const double l = std::log(p);
               const double b = 1.0 + omq * l;
               if (b < 0.0) return ExtReal::undefined(Reason::cutoff);
               if (b == 0.0) return 0.0;
               return p * b * std::log1p(omq * l) / omq;
             });
    }
    case Deform::oel: return s_tsallis(dist, q);
  }
  return ExtReal::undefined(Reason::invalid_input);
}

}  // namespace

ExtReal s_delta_closed(Deform d, QParam q, const Distribution& dist) {
  const ExtReal v = s_delta_raw(d, q, dist);
  return v.is_finite() ? ExtReal(v.value() + 0.0) : v;
}

ExtReal s_delta_via_generator(Deform d, QParam q, const Distribution& dist) {
  const Derivative dg = central_difference([&](double a) { return g_delta(d, q, dist, a); }, 1.0);
  if (!dg.value.is_finite()) return dg.value;
  if (dg.error > 1e-7 * std::max(1.0, std::abs(dg.value.value()))) return ExtReal::undefined(Reason::not_resolved);
  return ExtReal(-dist.k()) * dg.value;
}

ExtReal collapse_residual(Deform d, bool linear, QParam q, const Distribution& dist) {
  const RealFn gen([&dist](double a) { return g(dist, a); });
  const Derivative dg = linear ? d_linear(d, q, gen, 1.0) : d_nonlinear(d, q, gen, 1.0);
  const ExtReal h1 = h(d, q, 1.0);
  const ExtReal expected = (linear ? ExtReal(1.0) / h1 : h1) * ExtReal(dist.k() * s1(dist));
  return residual(ExtReal(-dist.k()) * dg.value, expected);
}

ExtReal renyi_relation_residual(const Distribution& dist, QParam q) {
  const double k = dist.k();
  const double sq = s_tsallis(dist, q) / k, sr = renyi(dist, q) / k;
  const ExtReal a = residual(deform(Deform::ile, q, sq), sr);
  const ExtReal b = residual(deform(Deform::ole, q, sr), sq);
  if (!a.is_finite()) return a;
  if (!b.is_finite()) return b;
  return std::max(a.value(), b.value());
}

std::string_view name(Curvature c) {
  switch (c) {
    case Curvature::concave: return "concave";
    case Curvature::convex: return "convex";
    case Curvature::indefinite: return "indefinite";
    case Curvature::flat: return "flat";
  }
  return "?";
}

AdmissibilityReport admissibility_report(Deform d, QParam q, int resolution) {
  if (resolution < 5) throw std::invalid_argument("resolution must be at least 5");
  AdmissibilityReport r{d, q.value(), resolution, 0.0, detail::inf, true, false, true, Curvature::flat, 0, 0, 0};
  r.certainty = s_delta_closed(d, q, Distribution({1.0, 0.0}));
  r.certainty_zero = r.certainty.is_finite() && std::abs(r.certainty.value()) <= 1e-12;

  std::vector<ExtReal> s(resolution);
  for (int j = 0; j < resolution; ++j) {
    const double p = static_cast<double>(j) / (resolution - 1);
    const Distribution two({p, 1.0 - p});
    s[j] = s_delta_closed(d, q, two);
    if (s[j].is_finite()) {
      ++r.finite_points;
      r.min_value = std::min(r.min_value, s[j].value());
    }
    const ExtReal s3 = s_delta_closed(d, q, two.with_zero());
    if (s[j].is_defined()) {
      const ExtReal diff = residual(s[j], s3);
      if (!diff.is_finite() || diff.value() > 1e-12) r.expansible = false;
    }
  }
  r.nonnegative = r.min_value >= -1e-12;

  constexpr double tol = 1e-9;
  for (int j = 2; j + 2 < resolution; ++j) {
    if (!s[j - 1].is_finite() || !s[j].is_finite() || !s[j + 1].is_finite()) continue;
    const double d2 = s[j - 1].value() - 2.0 * s[j].value() + s[j + 1].value();
    if (d2 > tol) ++r.convex_points;
    if (d2 < -tol) ++r.concave_points;
  }
  if (r.convex_points > 0 && r.concave_points > 0) {
    r.curvature = Curvature::indefinite;
  } else if (r.concave_points > 0) {
    r.curvature = Curvature::concave;
  } else if (r.convex_points > 0) {
    r.curvature = Curvature::convex;
  }
  return r;
}

Extensivity extensivity_demo(QParam q, double w1, double n, double k) {
  return {ExtReal(k) * ln_q(q, tpow(Deform::oel, q, w1, n)), ExtReal(n * k) * ln_q(q, w1)};
}

namespace {

// flags intermediates that are non-finite, zero or subnormal
struct Tracker {
  bool bad = false;
  ExtReal operator()(const ExtReal& v) {
    if (!v.is_finite() || !std::isnormal(v.value())) bad = true;
    return v;
  }
};

using Pair = std::pair<ExtReal, ExtReal>;

enum class Dom : unsigned char;

struct IdentityDef {
  const char* id;
  Dom domain;
  Pair (*eval)(QParam q, double x, double y, Tracker& t);
};

Pair qlog_product(QParam q, double x, double y, Tracker& t) {
  return {ln_q(q, x * y), t(op_closed(Deform::ole, Op::add, q, t(ln_q(q, x)).value(), t(ln_q(q, y)).value()))};
}
Pair qlog_ratio(QParam q, double x, double y, Tracker& t) {
  return {ln_q(q, x / y), t(op_closed(Deform::ole, Op::sub, q, t(ln_q(q, x)).value(), t(ln_q(q, y)).value()))};
}
Pair qlog_oel_product(QParam q, double x, double y, Tracker& t) {
  return {ln_q(q, t(op_closed(Deform::oel, Op::mul, q, x, y))), ln_q(q, x) + ln_q(q, y)};
}
Pair qlog_oel_ratio(QParam q, double x, double y, Tracker& t) {
  return {ln_q(q, t(op_closed(Deform::oel, Op::div, q, x, y))), ln_q(q, x) - ln_q(q, y)};
}
Pair log_iel_product(QParam q, double x, double y, Tracker& t) {
  return {ext::log(t(op_closed(Deform::iel, Op::mul, q, x, y))),
          op_closed(Deform::ole, Op::add, q, std::log(x), std::log(y))};
}
Pair log_iel_ratio(QParam q, double x, double y, Tracker& t) {
  return {ext::log(t(op_closed(Deform::iel, Op::div, q, x, y))),
          op_closed(Deform::ole, Op::sub, q, std::log(x), std::log(y))};
}
Pair log_oel_product(QParam q, double x, double y, Tracker& t) {
  return {ext::log(t(op_closed(Deform::oel, Op::mul, q, x, y))),
          t(op_closed(Deform::ile, Op::add, q, std::log(x), std::log(y)))};
}
Pair log_oel_ratio(QParam q, double x, double y, Tracker& t) {
  return {ext::log(t(op_closed(Deform::oel, Op::div, q, x, y))),
          t(op_closed(Deform::ile, Op::sub, q, std::log(x), std::log(y)))};
}
Pair qlog_oel_power(QParam q, double x, double y, Tracker& t) {
  return {ln_q(q, t(tpow(Deform::oel, q, x, y))), ExtReal(y) * ln_q(q, x)};
}
Pair log_iel_power(QParam q, double x, double y, Tracker& t) {
  return {ext::log(t(tpow(Deform::iel, q, x, y))), t(dot_mul(Deform::ole, q, y, std::log(x)))};
}
Pair log_oel_power(QParam q, double x, double y, Tracker& t) {
  return {ext::log(t(tpow(Deform::oel, q, x, y))), t(dot_mul(Deform::ile, q, y, std::log(x)))};
}
Pair qexp_ole_sum(QParam q, double x, double y, Tracker& t) {
  return {t(exp_q(q, t(op_closed(Deform::ole, Op::add, q, x, y)))), t(exp_q(q, x)) * t(exp_q(q, y))};
}
Pair qexp_ole_difference(QParam q, double x, double y, Tracker& t) {
  return {t(exp_q(q, t(op_closed(Deform::ole, Op::sub, q, x, y)))), t(exp_q(q, x)) / t(exp_q(q, y))};
}
Pair qexp_sum(QParam q, double x, double y, Tracker& t) {
  return {t(exp_q(q, x + y)), t(op_closed(Deform::oel, Op::mul, q, t(exp_q(q, x)).value(), t(exp_q(q, y)).value()))};
}
Pair qexp_difference(QParam q, double x, double y, Tracker& t) {
  return {t(exp_q(q, x - y)), t(op_closed(Deform::oel, Op::div, q, t(exp_q(q, x)).value(), t(exp_q(q, y)).value()))};
}
Pair exp_ole_sum(QParam q, double x, double y, Tracker& t) {
  return {ext::exp(op_closed(Deform::ole, Op::add, q, x, y)),
          t(op_closed(Deform::iel, Op::mul, q, std::exp(x), std::exp(y)))};
}
Pair exp_ole_difference(QParam q, double x, double y, Tracker& t) {
  return {ext::exp(op_closed(Deform::ole, Op::sub, q, x, y)),
          t(op_closed(Deform::iel, Op::div, q, std::exp(x), std::exp(y)))};
}
Pair exp_ile_sum(QParam q, double x, double y, Tracker& t) {
  return {ext::exp(t(op_closed(Deform::ile, Op::add, q, x, y))),
          t(op_closed(Deform::oel, Op::mul, q, std::exp(x), std::exp(y)))};
}
Pair exp_ile_difference(QParam q, double x, double y, Tracker& t) {
  return {ext::exp(t(op_closed(Deform::ile, Op::sub, q, x, y))),
          t(op_closed(Deform::oel, Op::div, q, std::exp(x), std::exp(y)))};
}
Pair qexp_oel_power(QParam q, double x, double y, Tracker& t) {
  return {t(tpow(Deform::oel, q, t(exp_q(q, x)).value(), y)), t(exp_q(q, y * x))};
}
Pair exp_iel_power(QParam q, double x, double y, Tracker& t) {
  return {t(tpow(Deform::iel, q, std::exp(x), y)), ext::exp(t(dot_mul(Deform::ole, q, y, x)))};
}
Pair exp_oel_power(QParam q, double x, double y, Tracker& t) {
  return {t(tpow(Deform::oel, q, std::exp(x), y)), ext::exp(t(dot_mul(Deform::ile, q, y, x)))};
}

// Regular domain: every bracket the identity passes through stays positive.
enum class Dom : unsigned char {
  positive,        // x, y > 0
  positive_ratio,  // x, y > 0; divides by 1 + (1-q) ln_q y = y^(1-q)
  oel_mul,         // x, y > 0 outside the oel product cutoff
  oel_div,
  el_brackets,     // x, y > 0 with 1 + (1-q) ln x, ln y > 0
  oel_power_log,   // x > 0, 1 + y (x^(1-q) - 1) > 0
  el_bracket_x,    // x > 0, 1 + (1-q) ln x > 0
  le_brackets,     // 1 + (1-q) x, y > 0
  le_sum,          // and 1 + (1-q)(x + y) > 0
  le_difference,   // and 1 + (1-q)(x - y) > 0
  ile_add,         // outside the ile sum cutoff
  ile_sub,
  qexp_power,      // 1 + (1-q) x > 0 and 1 + (1-q) x y > 0
  le_bracket_x,    // 1 + (1-q) x > 0
  oel_power_lin,   // 1 + y (e^((1-q) x) - 1) > 0
};

bool regular_point(Dom dom, QParam q, double x, double y) {
  const double c = q.omq();
  const auto elb = [c](double v) { return v > 0.0 && 1.0 + c * std::log(v) > 0.0; };
  const auto leb = [c](double v) { return 1.0 + c * v > 0.0; };
  switch (dom) {
    case Dom::positive:
    case Dom::positive_ratio: return x > 0.0 && y > 0.0;
    case Dom::oel_mul: return x > 0.0 && y > 0.0 && !in_cutoff(Deform::oel, Op::mul, q, x, y);
    case Dom::oel_div: return x > 0.0 && y > 0.0 && !in_cutoff(Deform::oel, Op::div, q, x, y);
    case Dom::el_brackets: return elb(x) && elb(y);
    case Dom::oel_power_log: return x > 0.0 && 1.0 + y * std::expm1(c * std::log(x)) > 0.0;
    case Dom::el_bracket_x: return elb(x);
    case Dom::le_brackets: return leb(x) && leb(y);
    case Dom::le_sum: return leb(x) && leb(y) && leb(x + y);
    case Dom::le_difference: return leb(x) && leb(y) && leb(x - y);
    case Dom::ile_add: return !in_cutoff(Deform::ile, Op::add, q, x, y);
    case Dom::ile_sub: return !in_cutoff(Deform::ile, Op::sub, q, x, y);
    case Dom::qexp_power: return leb(x) && leb(x * y);
    case Dom::le_bracket_x: return leb(x);
    case Dom::oel_power_lin: return 1.0 + y * std::expm1(c * x) > 0.0;
  }
  return false;
}

constexpr IdentityDef identities[] = {
    {"qlog_product", Dom::positive, qlog_product},
    {"qlog_ratio", Dom::positive_ratio, qlog_ratio},
    {"qlog_oel_product", Dom::oel_mul, qlog_oel_product},
    {"qlog_oel_ratio", Dom::oel_div, qlog_oel_ratio},
    {"log_iel_product", Dom::el_brackets, log_iel_product},
    {"log_iel_ratio", Dom::el_brackets, log_iel_ratio},
    {"log_oel_product", Dom::oel_mul, log_oel_product},
    {"log_oel_ratio", Dom::oel_div, log_oel_ratio},
    {"qlog_oel_power", Dom::oel_power_log, qlog_oel_power},
    {"log_iel_power", Dom::el_bracket_x, log_iel_power},
    {"log_oel_power", Dom::oel_power_log, log_oel_power},
    {"qexp_ole_sum", Dom::le_brackets, qexp_ole_sum},
    {"qexp_ole_difference", Dom::le_brackets, qexp_ole_difference},
    {"qexp_sum", Dom::le_sum, qexp_sum},
    {"qexp_difference", Dom::le_difference, qexp_difference},
    {"exp_ole_sum", Dom::le_brackets, exp_ole_sum},
    {"exp_ole_difference", Dom::le_brackets, exp_ole_difference},
    {"exp_ile_sum", Dom::ile_add, exp_ile_sum},
    {"exp_ile_difference", Dom::ile_sub, exp_ile_difference},
    {"qexp_oel_power", Dom::qexp_power, qexp_oel_power},
    {"exp_iel_power", Dom::le_bracket_x, exp_iel_power},
    {"exp_oel_power", Dom::oel_power_lin, exp_oel_power},
};

}  // namespace

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& def : identities) ids.emplace_back(def.id);
  return ids;
}

std::vector<IdentityResult> identity_suite(QParam q, double x, double y) {
  std::vector<IdentityResult> out;
  for (const auto& def : identities) {
    IdentityResult r{def.id, 0.0, false, {}};
    const bool regular = regular_point(def.domain, q, x, y);
    Tracker t;
    const Pair sides = def.eval(q, x, y, t);
    r.residual = residual(sides.first, sides.second);
    r.skipped = !regular || t.bad || !sides.first.is_finite() || !sides.second.is_finite();
    if (r.skipped) {
      r.skip_reason = "cutoff";
    } else if (def.domain == Dom::positive_ratio && !(std::exp(q.omq() * std::log(y)) > 1e-3)) {
      r.skipped = true;
      r.skip_reason = "collar";
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace qdeform
