#pragma once

#include <functional>
#include <limits>

#include "qdeform/ext_real.hpp"
#include "qdeform/numbers.hpp"
#include "qdeform/qparam.hpp"

namespace qdeform {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool contains(double x) const { return x >= lo && x <= hi; }
};

struct Derivative {
  ExtReal value;
  double error = 0.0;  // estimate; zero for exact derivatives
};

// Central difference with h = cbrt(eps)*max(1,|x|); one-sided near domain edges.
// The error estimate is |D(h) - D(2h)|.
Derivative central_difference(const std::function<ExtReal(double)>& f, double x, Interval dom = {});

// Real function with an optional exact derivative and a domain.
class RealFn {
 public:
  using Fn = std::function<double(double)>;

  RealFn(Fn f, Interval dom = {}) : f_(std::move(f)), dom_(dom) {}  // NOLINT
  RealFn(Fn f, Fn df, Interval dom = {}) : f_(std::move(f)), df_(std::move(df)), dom_(dom) {}

  ExtReal operator()(double x) const;
  Derivative derivative(double x) const;
  bool has_derivative() const { return static_cast<bool>(df_); }
  const Interval& domain() const { return dom_; }

 private:
  Fn f_;
  Fn df_;
  Interval dom_;
};

// Deforming function h: d_d x = h(x) dx; equals the derivative of complement(d).
ExtReal h(Deform d, QParam q, double x);

Derivative d_linear(Deform d, QParam q, const RealFn& f, double x);     // f'(x) / h(x)
Derivative d_nonlinear(Deform d, QParam q, const RealFn& f, double x);  // h(f(x)) f'(x)
Derivative d_nonlinear2(Deform d, QParam q, const RealFn& f, double x);

Derivative d_nobre_nonlinear(QParam q, const RealFn& f, double x);  // f^(1-q) f'
Derivative d_nobre_linear(QParam q, const RealFn& f, double x);     // x^(q-1) f'

ExtReal int_linear(Deform d, QParam q, const RealFn& f, double a, double b);     // int f h dx
ExtReal int_nonlinear(Deform d, QParam q, const RealFn& f, double a, double b);  // int f / h(f) dx
ExtReal qlog_integral(QParam q, double x);                                        // int_1^x t^-q dt

// Residual checks. Each returns a relative residual, undefined when a point is
// outside a domain or a derivative is not resolved.
ExtReal eigen_residual(Deform d, QParam q, double x);
ExtReal qexp_slope_residual(QParam q, double x);  // d exp_q = exp_q^q
ExtReal qlog_slope_residual(QParam q, double x);  // d ln_q = x^-q
ExtReal duality_residual(Deform d, QParam q, const RealFn& f, const RealFn& finv, double x);
ExtReal log_law_residual(Deform d, QParam q, double x);
ExtReal power_rule_residual(Side s, bool linear, QParam q, int n, double x, bool exact = false);
ExtReal product_rule_residual(Deform d, bool linear, QParam q, const RealFn& f, const RealFn& g, double x);
ExtReal equivalence_residual(Deform d, QParam q, double x);
ExtReal ft_linear_residual(Deform d, QParam q, const RealFn& f, double a, double x);
ExtReal ft_linear_second_residual(Deform d, QParam q, const RealFn& f, double a, double b);
ExtReal ft_nonlinear_residual(Deform d, QParam q, const RealFn& f, double a, double x);

}  // namespace qdeform
