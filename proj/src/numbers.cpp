#include "qdeform/numbers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "detail.hpp"
#include "qdeform/qfun.hpp"

namespace qdeform {

std::string_view name(Deform d) {
  switch (d) {
    case Deform::ile: return "ile";
    case Deform::ole: return "ole";
    case Deform::iel: return "iel";
    case Deform::oel: return "oel";
  }
  return "?";
}

std::optional<Deform> parse_deform(std::string_view s) {
  for (Deform d : all_deforms) {
    if (name(d) == s) return d;
  }
  return std::nullopt;
}

namespace {

ExtReal signed_value(int s, const ExtReal& v) {
  if (v.is_undefined()) return v;
  if (s == 0) return 0.0;
  return s > 0 ? v : -v;
}

double closed(Deform d, QParam q, double x) {
  if (q.classical()) return x;
  const double omq = q.omq();
  switch (d) {
    case Deform::ile: return detail::log_bracket(omq, omq * x);
    case Deform::ole: return detail::qexpm1(omq, x);
    case Deform::iel:
      if (x == 0.0) return 0.0;
      return sign(x) * std::exp(detail::lnq(omq, std::log(std::abs(x))));
    case Deform::oel:
      if (x == 0.0) return 0.0;
      return sign(x) * detail::bracket_pow(omq, omq * std::log(std::abs(x)));
  }
  return detail::nan;
}

#ifdef QDEFORM_ORACLE_CHECKS
// The composed route passes through exp or exp_q; compare only where that
// intermediate neither overflows nor underflows.
bool representable(Deform d, QParam q, double x) {
  auto normal = [](const ExtReal& v) { return v.is_finite() && std::abs(v.value()) > 1e-300 && std::abs(v.value()) < 1e300; };
  switch (d) {
    case Deform::ile: return normal(exp_q(q, x));
    case Deform::ole: return std::abs(x) < 690.0;
    case Deform::iel: return x == 0.0 || normal(ext::exp(ln_q(q, std::abs(x))));
    case Deform::oel: return true;
  }
  return true;
}
#endif

}  // namespace

ExtReal deform_composed(Deform d, QParam q, ExtReal x) {
  if (x.is_undefined()) return x;
  if (d == Deform::iel && q.below_one() && x.is_finite() && x.value() == 0.0) {
    return ExtReal::undefined(Reason::zero_argument);
  }
  switch (d) {
    case Deform::ile: return ext::log(exp_q(q, x));
    case Deform::ole: return ln_q(q, ext::exp(x));
    case Deform::iel: return signed_value(ext::sign(x), ext::exp(ln_q(q, ext::abs(x))));
    case Deform::oel: return signed_value(ext::sign(x), exp_q(q, ext::log(ext::abs(x))));
  }
  return ExtReal::undefined(Reason::invalid_input);
}

ExtReal deform(Deform d, QParam q, ExtReal x) {
  if (!x.is_finite()) return deform_composed(d, q, x);
  if (d == Deform::iel && q.below_one() && x.value() == 0.0) {
    return ExtReal::undefined(Reason::zero_argument);
  }
  const ExtReal r = closed(d, q, x.value());
#ifdef QDEFORM_ORACLE_CHECKS
  const ExtReal c = deform_composed(d, q, x);
  const bool both = r.is_finite() && c.is_finite();
  const bool clash = representable(d, q, x.value()) &&
                     (both ? residual(r, c).value() > 1e-12 : (!r.is_finite() && !c.is_finite() && r.kind() != c.kind()));
  if (clash) {
    throw std::logic_error("deform oracle mismatch: " + std::string(name(d)) + " q=" + std::to_string(q.value()) +
                           " x=" + std::to_string(x.value()));
  }
#endif
  return r;
}

ExtReal undeform(Deform d, QParam q, ExtReal y) {
  if (y.is_undefined()) return y;
  const double omq = q.omq();
  const double v = y.value();
  bool in_image = true;
  if (d == Deform::ole && !q.classical()) {
    in_image = q.below_one() ? v > -1.0 / omq : v < -1.0 / omq;
  } else if (d == Deform::iel && !q.classical()) {
    in_image = q.below_one() ? std::abs(v) > std::exp(-1.0 / omq) : std::abs(v) < std::exp(-1.0 / omq);
  }
  if (!in_image) return ExtReal::undefined(Reason::not_in_image);
  return deform(complement(d), q, y);
}

double bracket(Deform d, QParam q, double x) {
  const double omq = q.omq();
  if (family(d) == Family::le) return 1.0 + omq * x;
  return 1.0 + omq * std::log(std::abs(x));
}

FixedPoints fixed_points(Deform d, QParam q) {
  if (q.classical()) throw std::invalid_argument("every point is fixed at q = 1");
  FixedPoints fp;
  if (family(d) == Family::le) {
    fp.points = {0.0};
  } else if (d == Deform::iel && q.below_one()) {
    fp.points = {-1.0, 1.0};
    fp.zero_undefined = deform(d, q, 0.0).is_undefined();
  } else {
    fp.points = {-1.0, 0.0, 1.0};
  }
  for (double p : fp.points) fp.residuals.push_back(std::abs(deform(d, q, p).value() - p));
  return fp;
}

std::string_view name(Identity id) {
  switch (id) {
    case Identity::log_ile: return "log_ile";
    case Identity::log_ole: return "log_ole";
    case Identity::qlog_ile: return "qlog_ile";
    case Identity::qlog_ole: return "qlog_ole";
    case Identity::exp_iel: return "exp_iel";
    case Identity::exp_oel: return "exp_oel";
    case Identity::qexp_iel: return "qexp_iel";
    case Identity::qexp_oel: return "qexp_oel";
  }
  return "?";
}

namespace {

ExtReal max_residual(std::initializer_list<ExtReal> sides) {
  ExtReal worst = 0.0;
  for (auto a = sides.begin(); a != sides.end(); ++a) {
    for (auto b = a + 1; b != sides.end(); ++b) {
      const ExtReal r = residual(*a, *b);
      if (!r.is_finite()) return r;
      if (r.value() > worst.value()) worst = r;
    }
  }
  return worst;
}

}  // namespace

ExtReal identity_residual(Identity id, QParam q, double x) {
  const ExtReal X = x;
  switch (id) {
    case Identity::log_ile:
      return max_residual({deform(Deform::ile, q, ext::log(X)), ext::log(deform(Deform::oel, q, X))});
    case Identity::log_ole:
      return max_residual({deform(Deform::ole, q, ext::log(X)), ext::log(deform(Deform::iel, q, X)), ln_q(q, X)});
    case Identity::qlog_ile:
      return max_residual({deform(Deform::ile, q, ln_q(q, X)), ln_q(q, deform(Deform::oel, q, X)), ext::log(X)});
    case Identity::qlog_ole:
      return max_residual({deform(Deform::ole, q, ln_q(q, X)), ln_q(q, deform(Deform::iel, q, X))});
    case Identity::exp_iel:
      return max_residual({deform(Deform::iel, q, ext::exp(X)), ext::exp(deform(Deform::ole, q, X))});
    case Identity::exp_oel:
      return max_residual({deform(Deform::oel, q, ext::exp(X)), ext::exp(deform(Deform::ile, q, X)), exp_q(q, X)});
    case Identity::qexp_iel:
      return max_residual({deform(Deform::iel, q, exp_q(q, X)), exp_q(q, deform(Deform::ole, q, X)), ext::exp(X)});
    case Identity::qexp_oel:
      return max_residual({deform(Deform::oel, q, exp_q(q, X)), exp_q(q, deform(Deform::ile, q, X))});
  }
  return ExtReal::undefined(Reason::invalid_input);
}

ExtReal deform2(Family f, QParam q, QParam q2, ExtReal x) {
  if (f == Family::le) return ln_q(q, exp_q(q2, x));
  return exp_q(q, ln_q(q2, x));
}

}  // namespace qdeform
