#include "qdeform/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "detail.hpp"
#include "qdeform/arith.hpp"
#include "qdeform/qfun.hpp"
#include "qdeform/quadrature.hpp"

namespace qdeform {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double tiny = std::numeric_limits<double>::denorm_min();
// derivative estimates coarser than this (relative) are reported as unresolved
constexpr double resolve_tol = 1e-7;

double step(double x) {
  const double h = std::cbrt(eps) * std::max(1.0, std::abs(x));
  volatile double xh = x + h;
  return xh - x;
}

ExtReal unresolved() { return ExtReal::undefined(Reason::not_resolved); }

ExtReal checked(const Derivative& d) {
  if (!d.value.is_finite()) return d.value;
  if (d.error > resolve_tol * std::max(1.0, std::abs(d.value.value()))) return unresolved();
  return d.value;
}

Derivative resolved(double d, double err) {
  if (!std::isfinite(d) || !std::isfinite(err)) return {unresolved(), 0.0};
  return {d, err};
}

}  // namespace

Derivative central_difference(const std::function<ExtReal(double)>& f, double x, Interval dom) {
  const double hs = step(x);
  auto at = [&](double t) { return f(t); };
  auto finite = [](std::initializer_list<ExtReal> v) {
    for (const auto& e : v) {
      if (!e.is_finite()) return false;
    }
    return true;
  };
  if (dom.contains(x - 2 * hs) && dom.contains(x + 2 * hs)) {
    const ExtReal a = at(x - hs), b = at(x + hs), a2 = at(x - 2 * hs), b2 = at(x + 2 * hs);
    if (!finite({a, b, a2, b2})) return {unresolved(), 0.0};
    const double d1 = (b.value() - a.value()) / (2 * hs);
    const double d2 = (b2.value() - a2.value()) / (4 * hs);
    const double fmax = std::max({std::abs(a.value()), std::abs(b.value()), std::abs(a2.value()), std::abs(b2.value())});
    return resolved(d1, std::abs(d1 - d2) + 4 * (eps * fmax + tiny) / hs);
  }
  const double s = dom.contains(x + 4 * hs) ? hs : -hs;
  const ExtReal f0 = at(x), f1 = at(x + s), f2 = at(x + 2 * s), f4 = at(x + 4 * s);
  if (!finite({f0, f1, f2, f4})) return {unresolved(), 0.0};
  const double d1 = (-3 * f0.value() + 4 * f1.value() - f2.value()) / (2 * s);
  const double d2 = (-3 * f0.value() + 4 * f2.value() - f4.value()) / (4 * s);
  const double fmax = std::max({std::abs(f0.value()), std::abs(f1.value()), std::abs(f2.value()), std::abs(f4.value())});
  return resolved(d1, std::abs(d1 - d2) + 16 * (eps * fmax + tiny) / hs);
}

ExtReal RealFn::operator()(double x) const {
  if (!dom_.contains(x)) return ExtReal::undefined(Reason::invalid_input);
  return f_(x);
}

Derivative RealFn::derivative(double x) const {
  if (!dom_.contains(x)) return {ExtReal::undefined(Reason::invalid_input), 0.0};
  if (df_) return {df_(x), 0.0};
  return central_difference([this](double t) { return (*this)(t); }, x, dom_);
}

ExtReal h(Deform d, QParam q, double x) {
  if (std::isnan(x)) return ExtReal::undefined(Reason::invalid_input);
  if (q.classical()) return 1.0;
  const double omq = q.omq();
  switch (d) {
    case Deform::ile: return std::exp(omq * x);
    case Deform::ole: {
      const double den = 1.0 + omq * x;
      if (den == 0.0) return ExtReal::undefined(Reason::pole);
      return 1.0 / den;
    }
    case Deform::iel: {
      if (x <= 0.0) return ExtReal::undefined(Reason::negative_argument);
      const double l = std::log(x);
      const double b = 1.0 + omq * l;
      if (b < 0.0) return ExtReal::undefined(Reason::cutoff);
      if (b == 0.0) return std::pow(0.0, q.value() / omq) / x;
      return std::exp(-l + q.value() * std::log1p(omq * l) / omq);
    }
    case Deform::oel: {
      if (x <= 0.0) return ExtReal::undefined(Reason::negative_argument);
      const double l = std::log(x);
      return std::exp(-q.value() * l + detail::lnq(omq, l));
    }
  }
  return ExtReal::undefined(Reason::invalid_input);
}

namespace {

// w * d with the error scaled alongside; overflow of either is unresolved
Derivative scaled(const Derivative& d, const ExtReal& w) {
  if (d.value.is_undefined() || w.is_undefined()) return {d.value.is_undefined() ? d.value : w, 0.0};
  const ExtReal v = w * d.value;
  const double err = std::abs(w.value()) * d.error;
  if (!v.is_finite() || !std::isfinite(err)) return {unresolved(), 0.0};
  return {v, err};
}

}  // namespace

Derivative d_linear(Deform d, QParam q, const RealFn& f, double x) {
  const ExtReal hx = h(d, q, x);
  if (hx.is_finite() && hx.value() == 0.0) return {unresolved(), 0.0};
  return scaled(f.derivative(x), ExtReal(1.0) / hx);
}

Derivative d_nonlinear(Deform d, QParam q, const RealFn& f, double x) {
  const ExtReal fx = f(x);
  if (!fx.is_finite()) return {fx.is_undefined() ? fx : unresolved(), 0.0};
  return scaled(f.derivative(x), h(d, q, fx.value()));
}

Derivative d_nonlinear2(Deform d, QParam q, const RealFn& f, double x) {
  auto inner = [&](double t) -> ExtReal {
    const Derivative v = d_nonlinear(d, q, f, t);
    return checked(v);
  };
  const Derivative g = central_difference(inner, x, f.domain());
  const ExtReal fx = f(x);
  if (!fx.is_finite()) return {fx.is_undefined() ? fx : unresolved(), 0.0};
  return scaled(g, h(d, q, fx.value()));
}

Derivative d_nobre_nonlinear(QParam q, const RealFn& f, double x) {
  return scaled(f.derivative(x), ext::pow(f(x), q.omq()));
}

Derivative d_nobre_linear(QParam q, const RealFn& f, double x) {
  return scaled(f.derivative(x), ext::pow(x, -q.omq()));
}

namespace {

ExtReal quad(const std::function<double(double)>& g, double a, double b, double abs_tol = 1e-10) {
  const Quadrature r = integrate(g, a, b, abs_tol);
  if (!r.ok) return ExtReal::undefined(Reason::quadrature_failed);
  return r.value;
}

std::function<double(double)> linear_integrand(Deform d, QParam q, const RealFn& f) {
  return [d, q, &f](double t) { return (f(t) * h(d, q, t)).value(); };
}

std::function<double(double)> nonlinear_integrand(Deform d, QParam q, const RealFn& f) {
  return [d, q, &f](double t) {
    const ExtReal ft = f(t);
    if (!ft.is_finite()) return detail::nan;
    return (ft / h(d, q, ft.value())).value();
  };
}

// F'(x) for F(t) = int_a^t g: central differences F(x+e) - F(x-e) taken as
// single integrals over the stencil, Richardson-extrapolated over e and 2e.
Derivative running_slope(const std::function<double(double)>& g, double x) {
  const double e = step(x);
  const ExtReal s1 = quad(g, x - e, x + e, 0.0) / ExtReal(2 * e);
  const ExtReal s2 = quad(g, x - 2 * e, x + 2 * e, 0.0) / ExtReal(4 * e);
  if (!s1.is_finite() || !s2.is_finite()) return {s1.is_finite() ? s2 : s1, 0.0};
  return resolved((4 * s1.value() - s2.value()) / 3, std::abs(s1.value() - s2.value()));
}


}  // namespace

ExtReal int_linear(Deform d, QParam q, const RealFn& f, double a, double b) {
  return quad(linear_integrand(d, q, f), a, b);
}

ExtReal int_nonlinear(Deform d, QParam q, const RealFn& f, double a, double b) {
  return quad(nonlinear_integrand(d, q, f), a, b);
}

ExtReal qlog_integral(QParam q, double x) {
  if (!(x > 0.0)) return ExtReal::undefined(Reason::negative_argument);
  const double p = q.value();
  return quad([p](double t) { return std::pow(t, -p); }, 1.0, x);
}

ExtReal eigen_residual(Deform d, QParam q, double x) {
  const Deform c = complement(d);
  const RealFn f([c, q](double t) { return ext::exp(deform(c, q, t)).value(); });
  const ExtReal lhs = checked(d_linear(d, q, f, x));
  return residual(lhs, f(x));
}

ExtReal qexp_slope_residual(QParam q, double x) {
  const RealFn f([q](double t) { return exp_q(q, t).value(); });
  const ExtReal e = exp_q(q, x);
  return residual(checked(f.derivative(x)), ext::pow(e, q.value()));
}

ExtReal qlog_slope_residual(QParam q, double x) {
  if (!(x > 0.0)) return ExtReal::undefined(Reason::negative_argument);
  const RealFn f([q](double t) { return ln_q(q, t).value(); }, Interval{0.0});
  return residual(checked(f.derivative(x)), std::pow(x, -q.value()));
}

ExtReal duality_residual(Deform d, QParam q, const RealFn& f, const RealFn& finv, double x) {
  const ExtReal a = checked(d_linear(d, q, f, x));
  const ExtReal y = f(x);
  if (!y.is_finite()) return y.is_undefined() ? y : unresolved();
  const ExtReal b = checked(d_nonlinear(d, q, finv, y.value()));
  return residual(a * b, 1.0);
}

ExtReal log_law_residual(Deform d, QParam q, double x) {
  if (!(x > 0.0)) return ExtReal::undefined(Reason::negative_argument);
  const RealFn f([d, q](double t) { return deform(d, q, std::log(t)).value(); }, Interval{0.0});
  return residual(checked(d_nonlinear(d, q, f, x)), 1.0 / x);
}

namespace {

ExtReal worse(const ExtReal& a, const ExtReal& b) {
  if (a.is_undefined()) return a;
  if (b.is_undefined()) return b;
  return b.value() > a.value() ? b : a;
}

}  // namespace

ExtReal power_rule_residual(Side s, bool linear, QParam q, int n, double x, bool exact) {
  ExtReal worst = 0.0;
  bool any = false;
  for (Family fam : {Family::le, Family::el}) {
    if (fam == Family::el && !(x > 0.0)) continue;
    const Deform cls = make_deform(fam, s);
    const Deform other = complement(cls);
    const Interval dom = fam == Family::el ? Interval{0.0} : Interval{};
    ExtReal r;
    if (linear) {
      RealFn::Fn fn = [=](double t) { return std::pow(deform(other, q, t).value(), n); };
      RealFn::Fn dfn;
      if (exact) {
        dfn = [=](double t) { return n * std::pow(deform(other, q, t).value(), n - 1) * h(cls, q, t).value(); };
      }
      const RealFn f = exact ? RealFn(fn, dfn, dom) : RealFn(fn, dom);
      r = residual(checked(d_linear(cls, q, f, x)), n * std::pow(deform(other, q, x).value(), n - 1));
    } else {
      RealFn::Fn fn = [=](double t) { return deform(cls, q, std::pow(t, n)).value(); };
      RealFn::Fn dfn;
      if (exact) {
        dfn = [=](double t) { return h(other, q, std::pow(t, n)).value() * n * std::pow(t, n - 1); };
      }
      const RealFn f = exact ? RealFn(fn, dfn, dom) : RealFn(fn, dom);
      r = residual(checked(d_nonlinear(cls, q, f, x)), n * std::pow(x, n - 1));
      const ExtReal base = deform(cls, q, x);
      if (base.is_finite() && base.value() > 0.0) {
        r = worse(r, residual(tpow(cls, q, base.value(), n), deform(cls, q, std::pow(x, n))));
      }
    }
    if (r.is_undefined()) continue;
    worst = any ? worse(worst, r) : r;
    any = true;
  }
  return any ? worst : unresolved();
}

ExtReal product_rule_residual(Deform d, bool linear, QParam q, const RealFn& f, const RealFn& g, double x) {
  RealFn::Fn fg = [&f, &g](double t) { return (f(t) * g(t)).value(); };
  RealFn::Fn dfg;
  if (f.has_derivative() && g.has_derivative()) {
    dfg = [&f, &g](double t) {
      return (f.derivative(t).value * g(t) + f(t) * g.derivative(t).value).value();
    };
  }
  Interval dom{std::max(f.domain().lo, g.domain().lo), std::min(f.domain().hi, g.domain().hi)};
  const RealFn prod = dfg ? RealFn(fg, dfg, dom) : RealFn(fg, dom);
  const ExtReal fx = f(x), gx = g(x), px = prod(x);
  if (linear) {
    const ExtReal lhs = checked(d_linear(d, q, prod, x));
    const ExtReal rhs = checked(d_linear(d, q, f, x)) * gx + fx * checked(d_linear(d, q, g, x));
    return residual(lhs, rhs);
  }
  if (!fx.is_finite() || !gx.is_finite() || !px.is_finite()) return unresolved();
  const ExtReal lhs = checked(d_nonlinear(d, q, prod, x)) / h(d, q, px.value());
  const ExtReal rhs = checked(d_nonlinear(d, q, f, x)) / h(d, q, fx.value()) * gx +
                      fx * (checked(d_nonlinear(d, q, g, x)) / h(d, q, gx.value()));
  return residual(lhs, rhs);
}

ExtReal equivalence_residual(Deform d, QParam q, double x) {
  const Deform c = complement(d);
  const Interval dom = family(d) == Family::el ? Interval{0.0} : Interval{};
  const RealFn f([c, q](double t) { return deform(c, q, t).value(); }, dom);
  return residual(checked(f.derivative(x)), h(d, q, x));
}

ExtReal ft_linear_residual(Deform d, QParam q, const RealFn& f, double a, double x) {
  const auto g = linear_integrand(d, q, f);
  if (quad(g, a, x).is_undefined()) return ExtReal::undefined(Reason::quadrature_failed);
  return residual(checked(scaled(running_slope(g, x), ExtReal(1.0) / h(d, q, x))), f(x));
}

ExtReal ft_linear_second_residual(Deform d, QParam q, const RealFn& f, double a, double b) {
  auto g = [d, q, &f](double t) {
    const ExtReal v = checked(d_linear(d, q, f, t)) * h(d, q, t);
    return v.value();
  };
  return residual(quad(g, a, b), f(b) - f(a));
}

ExtReal ft_nonlinear_residual(Deform d, QParam q, const RealFn& f, double a, double x) {
  const auto g = nonlinear_integrand(d, q, f);
  const ExtReal F = quad(g, a, x);
  if (!F.is_finite()) return F.is_undefined() ? F : unresolved();
  return residual(checked(scaled(running_slope(g, x), h(d, q, F.value()))), f(x));
}

}  // namespace qdeform
