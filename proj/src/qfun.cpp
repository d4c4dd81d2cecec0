#include "qdeform/qfun.hpp"

#include "detail.hpp"

namespace qdeform {

ExtReal ln_q(QParam q, ExtReal x) {
  if (x.is_undefined()) return x;
  if (x.kind() == ExtReal::Kind::neg_inf || (x.is_finite() && x.value() < 0.0)) {
    return ExtReal::undefined(Reason::negative_argument);
  }
  if (x.kind() == ExtReal::Kind::pos_inf) {
    return q.above_one() ? ExtReal(-1.0 / q.omq()) : ExtReal::pos_inf();
  }
  if (x.value() == 0.0) {
    return q.below_one() ? ExtReal(-1.0 / q.omq()) : ExtReal::neg_inf();
  }
  return detail::lnq(q.omq(), std::log(x.value()));
}

ExtReal exp_q(QParam q, ExtReal x) {
  if (x.is_undefined()) return x;
  if (q.classical()) return ext::exp(x);
  const double omq = q.omq();
  if (x.kind() == ExtReal::Kind::pos_inf) return ExtReal::pos_inf();
  if (x.kind() == ExtReal::Kind::neg_inf) return 0.0;
  return detail::expq(omq, x.value());
}

ExtReal nonadditivity_residual(QParam q, double x, double y) {
  const ExtReal lx = ln_q(q, x), ly = ln_q(q, y);
  return ln_q(q, x * y) - (lx + ly + ExtReal(q.omq()) * lx * ly);
}

}  // namespace qdeform
