#include "qdeform/ext_real.hpp"

#include <algorithm>

namespace qdeform {

std::string_view reason_name(Reason r) {
  switch (r) {
    case Reason::none: return "none";
    case Reason::invalid_input: return "invalid_input";
    case Reason::negative_argument: return "negative_argument";
    case Reason::zero_argument: return "zero_argument";
    case Reason::not_in_image: return "not_in_image";
    case Reason::pole: return "pole";
    case Reason::division_by_zero: return "division_by_zero";
    case Reason::no_element: return "no_element";
    case Reason::cutoff: return "cutoff";
    case Reason::quadrature_failed: return "quadrature_failed";
    case Reason::not_resolved: return "not_resolved";
  }
  return "unknown";
}

namespace {

ExtReal first_undefined(const ExtReal& a, const ExtReal& b) {
  return a.is_undefined() ? a : b;
}

}  // namespace

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.is_undefined() || b.is_undefined()) return first_undefined(a, b);
  return ExtReal(a.value() + b.value());
}

ExtReal operator-(const ExtReal& a, const ExtReal& b) {
  if (a.is_undefined() || b.is_undefined()) return first_undefined(a, b);
  return ExtReal(a.value() - b.value());
}

ExtReal operator*(const ExtReal& a, const ExtReal& b) {
  if (a.is_undefined() || b.is_undefined()) return first_undefined(a, b);
  return ExtReal(a.value() * b.value());
}

ExtReal operator/(const ExtReal& a, const ExtReal& b) {
  if (a.is_undefined() || b.is_undefined()) return first_undefined(a, b);
  if (b.is_finite() && b.value() == 0.0) return ExtReal::undefined(Reason::division_by_zero);
  return ExtReal(a.value() / b.value());
}

ExtReal operator-(const ExtReal& a) {
  if (a.is_undefined()) return a;
  return ExtReal(-a.value());
}

namespace ext {

ExtReal exp(const ExtReal& x) {
  if (x.is_undefined()) return x;
  return ExtReal(std::exp(x.value()));
}

ExtReal log(const ExtReal& x) {
  if (x.is_undefined()) return x;
  if (x.value() < 0.0) return ExtReal::undefined(Reason::negative_argument);
  return ExtReal(std::log(x.value()));
}

ExtReal abs(const ExtReal& x) {
  if (x.is_undefined()) return x;
  return ExtReal(std::abs(x.value()));
}

ExtReal pow(const ExtReal& base, double e) {
  if (base.is_undefined()) return base;
  if (base.value() < 0.0) return ExtReal::undefined(Reason::negative_argument);
  return ExtReal(std::pow(base.value(), e));
}

int sign(const ExtReal& x) { return x.is_undefined() ? 0 : qdeform::sign(x.value()); }

}  // namespace ext

ExtReal residual(const ExtReal& a, const ExtReal& b) {
  if (a.is_undefined() || b.is_undefined()) return first_undefined(a, b);
  if (a.is_finite() != b.is_finite() || a.kind() != b.kind()) return ExtReal::pos_inf();
  if (!a.is_finite()) return 0.0;
  const double x = a.value(), y = b.value();
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace qdeform
