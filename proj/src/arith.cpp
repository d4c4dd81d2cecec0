#include "qdeform/arith.hpp"

#include <cmath>

#include "detail.hpp"
#include "qdeform/qfun.hpp"

namespace qdeform {

using detail::inf;

std::string_view name(Op op) {
  switch (op) {
    case Op::add: return "add";
    case Op::sub: return "sub";
    case Op::mul: return "mul";
    case Op::div: return "div";
  }
  return "?";
}

std::optional<Op> parse_op(std::string_view s) {
  for (Op op : all_ops) {
    if (name(op) == s) return op;
  }
  return std::nullopt;
}

namespace {

ExtReal apply(Op op, const ExtReal& a, const ExtReal& b) {
  switch (op) {
    case Op::add: return a + b;
    case Op::sub: return a - b;
    case Op::mul: return a * b;
    case Op::div: return a / b;
  }
  return ExtReal::undefined(Reason::invalid_input);
}

double pm(Op op, double a, double b) { return op == Op::add ? a + b : a - b; }

double ile_closed(Op op, double omq, double x, double y) {
  const double ex = std::expm1(omq * x), ey = std::expm1(omq * y);
  switch (op) {
    case Op::add: return detail::log_bracket(omq, ex + ey);
    case Op::sub: return detail::log_bracket(omq, ex - ey);
    case Op::mul: return detail::log_bracket(omq, ex * ey / omq);
    case Op::div: return detail::log_bracket(omq, omq * ex / ey);
  }
  return detail::nan;
}

double log1p_plus(double u) { return u <= -1.0 ? -inf : std::log1p(u); }

double ole_closed(Op op, double omq, double x, double y) {
  switch (op) {
    case Op::add: return x + y + omq * x * y;
    case Op::sub: return (x - y) / (1.0 + omq * y);
    case Op::mul: return std::expm1(log1p_plus(omq * x) * log1p_plus(omq * y) / omq) / omq;
    case Op::div: return std::expm1(omq * log1p_plus(omq * x) / log1p_plus(omq * y)) / omq;
  }
  return detail::nan;
}

double iel_closed(Op op, double omq, double x, double y) {
  const double lx = std::log(std::abs(x)), ly = std::log(std::abs(y));
  if (op == Op::add || op == Op::sub) {
    const double s = pm(op, sign(x) * detail::bracket_pow(omq, omq * lx), sign(y) * detail::bracket_pow(omq, omq * ly));
    const int sg = sign(pm(op, x, y));
    if (sg == 0) return 0.0;
    return sg * std::exp(detail::lnq(omq, std::log(std::abs(s))));
  }
  const double bx = std::max(0.0, 1.0 + omq * lx), by = std::max(0.0, 1.0 + omq * ly);
  if (op == Op::mul) {
    const int sg = sign(x) * sign(y);
    if (sg == 0) return 0.0;
    if (bx > 0.0 && by > 0.0 && std::isfinite(bx * by)) return sg * std::exp(lx + ly + omq * lx * ly);
    return sg * std::exp((bx * by - 1.0) / omq);
  }
  const int sg = sign(x) * sign(y);
  if (sg == 0) return 0.0;
  if (bx > 0.0 && by > 0.0 && std::isfinite(bx) && std::isfinite(by)) return sg * std::exp((lx - ly) / by);
  return sg * std::exp((bx / by - 1.0) / omq);
}

double oel_closed(Op op, double omq, double x, double y) {
  const double lx = std::log(std::abs(x)), ly = std::log(std::abs(y));
  if (op == Op::add || op == Op::sub) {
    const double s = pm(op, sign(x) * std::exp(detail::lnq(omq, lx)), sign(y) * std::exp(detail::lnq(omq, ly)));
    const int sg = sign(pm(op, x, y));
    if (sg == 0) return 0.0;
    return sg * detail::bracket_pow(omq, omq * std::log(std::abs(s)));
  }
  const int sg = sign(x) * sign(y);
  if (sg == 0) return 0.0;
  const double ex = std::expm1(omq * lx), ey = std::expm1(omq * ly);
  return sg * detail::bracket_pow(omq, op == Op::mul ? ex + ey : ex - ey);
}

}  // namespace

ExtReal op_rule(Deform d, Op op, QParam q, ExtReal x, ExtReal y) {
  const Deform c = complement(d);
  return deform(d, q, apply(op, deform(c, q, x), deform(c, q, y)));
}

ExtReal op_closed(Deform d, Op op, QParam q, double x, double y) {
  if (std::isnan(x) || std::isnan(y)) return ExtReal::undefined(Reason::invalid_input);
  if (op == Op::div) {
    if (y == 0.0) return ExtReal::undefined(Reason::division_by_zero);
  }
  if (q.classical()) return apply(op, x, y);
  const double omq = q.omq();
  switch (d) {
    case Deform::ile:
      if (op == Op::div && std::expm1(omq * y) == 0.0) return ExtReal::undefined(Reason::division_by_zero);
      return ile_closed(op, omq, x, y);
    case Deform::ole:
      if (op == Op::sub && 1.0 + omq * y == 0.0) return ExtReal::undefined(Reason::pole);
      if (op == Op::div && log1p_plus(omq * y) == 0.0) return ExtReal::undefined(Reason::division_by_zero);
      return ole_closed(op, omq, x, y);
    case Deform::iel: return iel_closed(op, omq, x, y);
    case Deform::oel: return oel_closed(op, omq, x, y);
  }
  return ExtReal::undefined(Reason::invalid_input);
}

bool printed_sign_differs(Deform d, Op op, QParam q, double x, double y) {
  if (family(d) != Family::el || (op != Op::add && op != Op::sub)) return false;
  const Deform c = complement(d);
  const ExtReal s = apply(op, deform(c, q, x), deform(c, q, y));
  return s.is_undefined() || ext::sign(s) != sign(pm(op, x, y));
}

bool in_cutoff(Deform d, Op op, QParam q, double x, double y) {
  if (q.classical() || std::isnan(x) || std::isnan(y)) return false;
  const double omq = q.omq();
  if (d == Deform::ile) {
    const double ex = std::expm1(omq * x), ey = std::expm1(omq * y);
    double u = 0.0;
    switch (op) {
      case Op::add: u = ex + ey; break;
      case Op::sub: u = ex - ey; break;
      case Op::mul: u = ex * ey / omq; break;
      case Op::div: u = omq * ex / ey; break;
    }
    return u <= -1.0;
  }
  if (d != Deform::oel) return false;
  if (op == Op::mul || op == Op::div) {
    const double ex = std::expm1(omq * std::log(std::abs(x))), ey = std::expm1(omq * std::log(std::abs(y)));
    return (op == Op::mul ? ex + ey : ex - ey) <= -1.0;
  }
  const double s = pm(op, sign(x) * std::exp(detail::lnq(omq, std::log(std::abs(x)))),
                      sign(y) * std::exp(detail::lnq(omq, std::log(std::abs(y)))));
  if (s == 0.0) return false;
  return 1.0 + omq * std::log(std::abs(s)) <= 0.0;
}

std::string_view name(Element::Kind k) {
  switch (k) {
    case Element::Kind::point: return "point";
    case Element::Kind::interval: return "interval";
    case Element::Kind::none: return "none";
    case Element::Kind::conditional: return "conditional";
  }
  return "?";
}

bool Element::contains(double v, double tol) const {
  switch (kind) {
    case Kind::point:
    case Kind::conditional: return std::abs(v - value) <= tol * std::max(1.0, std::abs(value));
    case Kind::interval: return std::abs(v) <= bound * (1.0 + tol);
    case Kind::none: return false;
  }
  return false;
}

bool Element::applies_to(double x) const {
  if (kind == Kind::none) return false;
  return kind != Kind::conditional || std::abs(x) < bound;
}

namespace {

// e^{-1/(1-q)}: edge of the iel plateau at zero (q < 1) or at infinity (q > 1)
double iel_edge(QParam q) { return std::exp(-1.0 / q.omq()); }

Element point(double v) { return {Element::Kind::point, v, 0.0}; }

}  // namespace

Element neutral_add(Deform d, QParam q) {
  if (family(d) == Family::le || q.classical() || q.above_one()) return point(0.0);
  if (d == Deform::iel) return {Element::Kind::interval, 0.0, iel_edge(q)};
  return {Element::Kind::none, 0.0, 0.0};
}

Element neutral_mul(Deform d, QParam q) {
  if (q.classical()) return point(1.0);
  const double omq = q.omq();
  switch (d) {
    case Deform::ile:
      if (q.value() >= 2.0) return {Element::Kind::none, 0.0, 0.0};
      return point(std::log1p(omq) / omq);
    case Deform::ole: return point(std::expm1(omq) / omq);
    default: return point(1.0);
  }
}

Element absorbing(Deform d, QParam q) {
  if (family(d) == Family::le || q.classical() || q.above_one()) return point(0.0);
  if (d == Deform::iel) return {Element::Kind::interval, 0.0, iel_edge(q)};
  return {Element::Kind::conditional, 0.0, 1.0};
}

ExtReal neg(Deform d, QParam q, double y) {
  if (q.classical()) return -y;
  const double omq = q.omq();
  switch (d) {
    case Deform::ile: {
      const double u = -std::expm1(omq * y);
      if (u <= -1.0) return ExtReal::undefined(Reason::no_element);
      return std::log1p(u) / omq;
    }
    case Deform::ole: {
      const double den = 1.0 + omq * y;
      if (den == 0.0) return ExtReal::undefined(Reason::pole);
      return -y / den;
    }
    case Deform::iel: {
      const double c = iel_edge(q);
      const bool regular = q.below_one() ? std::abs(y) > c : std::abs(y) < c;
      return regular ? -y : -sign(y) * c;
    }
    case Deform::oel:
      if (q.below_one()) return ExtReal::undefined(Reason::no_element);
      return -y;
  }
  return ExtReal::undefined(Reason::invalid_input);
}

ExtReal inv(Deform d, QParam q, double y) {
  if (y == 0.0) return ExtReal::undefined(Reason::division_by_zero);
  if (q.classical()) return 1.0 / y;
  const double omq = q.omq();
  switch (d) {
    case Deform::ile: {
      if (!neutral_mul(d, q).exists()) return ExtReal::undefined(Reason::no_element);
      const double u = omq * omq / std::expm1(omq * y);
      if (u <= -1.0 || std::isnan(u)) return ExtReal::undefined(Reason::no_element);
      return std::log1p(u) / omq;
    }
    case Deform::ole: {
      const double u = omq * y;
      if (u <= -1.0) return ExtReal::undefined(Reason::no_element);
      return std::expm1(omq * omq / std::log1p(u)) / omq;
    }
    case Deform::iel: {
      const double l = std::log(std::abs(y));
      const double b = 1.0 + omq * l;
      if (b <= 0.0) return ExtReal::undefined(Reason::no_element);
      return sign(y) * std::exp(-l / b);
    }
    case Deform::oel: {
      const double e = std::expm1(omq * std::log(std::abs(y)));  // base = 1 - e
      if (e < 1.0) return sign(y) * std::exp(std::log1p(-e) / omq);
      if (q.below_one()) return 0.0;
      return ExtReal::undefined(Reason::no_element);
    }
  }
  return ExtReal::undefined(Reason::invalid_input);
}

ExtReal tpow(Deform d, QParam q, double x, double y) {
  if (std::isnan(x) || std::isnan(y)) return ExtReal::undefined(Reason::invalid_input);
  if (x < 0.0) return ExtReal::undefined(Reason::negative_argument);
  if (q.classical()) return std::pow(x, y);
  const double omq = q.omq();
  switch (d) {
    case Deform::ile: return detail::log_bracket(omq, omq * std::pow(std::expm1(omq * x) / omq, y));
    case Deform::ole: return detail::qexpm1(omq, std::pow(detail::log_bracket(omq, omq * x), y));
    case Deform::iel: {
      const double l = std::log(x);
      const double b = std::max(0.0, 1.0 + omq * l);
      if (y == 0.0) return 1.0;
      if (y == 1.0 && x > 0.0) return x;
      if (b > 0.0 && std::isfinite(b)) return std::exp(std::expm1(y * std::log1p(omq * l)) / omq);
      return std::exp((std::pow(b, y) - 1.0) / omq);
    }
    case Deform::oel:
      if (y == 0.0) return 1.0;
      return detail::bracket_pow(omq, y * std::expm1(omq * std::log(x)));
  }
  return ExtReal::undefined(Reason::invalid_input);
}

ExtReal tpow_rule(Deform d, QParam q, ExtReal x, ExtReal y) {
  if (x.is_undefined() || y.is_undefined()) return x.is_undefined() ? x : y;
  if (x.value() < 0.0) return ExtReal::undefined(Reason::negative_argument);
  return deform(d, q, ext::pow(deform(complement(d), q, x), y.value()));
}

ExtReal dot_mul(Deform d, QParam q, double x, double y) {
  if (std::isnan(x) || std::isnan(y)) return ExtReal::undefined(Reason::invalid_input);
  if (q.classical()) return x * y;
  const double omq = q.omq();
  switch (d) {
    case Deform::ile: return detail::log_bracket(omq, x * std::expm1(omq * y));
    case Deform::ole: {
      const double u = omq * y;
      if (u <= -1.0) return (std::pow(0.0, x) - 1.0) / omq;
      return std::expm1(x * std::log1p(u)) / omq;
    }
    case Deform::iel:
      if (x < 0.0) return ExtReal::undefined(Reason::negative_argument);
      if (y == 0.0) return 0.0;
      return sign(y) * std::exp(detail::lnq(omq, std::log(x)) + std::pow(x, omq) * std::log(std::abs(y)));
    case Deform::oel:
      if (x < 0.0) return ExtReal::undefined(Reason::negative_argument);
      if (y == 0.0) return 0.0;
      return sign(y) * detail::bracket_pow(omq, omq * std::log(x) + std::expm1(omq * std::log(std::abs(y))));
  }
  return ExtReal::undefined(Reason::invalid_input);
}

ExtReal dot_rule(Deform d, QParam q, ExtReal x, ExtReal y) {
  return deform(d, q, x * deform(complement(d), q, y));
}

ExtReal dot_one(Deform d, QParam q, double x) {
  switch (d) {
    case Deform::ile: return deform(d, q, ExtReal(x) * deform(Deform::ole, q, 1.0));
    case Deform::ole: return deform(d, q, ExtReal(x) * deform(Deform::ile, q, 1.0));
    default: return deform(d, q, x);
  }
}

ExtReal op_rule2(Family f, Op op, QParam q, QParam q2, ExtReal x, ExtReal y) {
  return deform2(f, q, q2, apply(op, deform2(f, q2, q, x), deform2(f, q2, q, y)));
}

}  // namespace qdeform
