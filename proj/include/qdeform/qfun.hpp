#pragma once

#include "qdeform/ext_real.hpp"
#include "qdeform/qparam.hpp"

namespace qdeform {

// q-logarithm (x^(1-q) - 1)/(1-q), x >= 0.
ExtReal ln_q(QParam q, ExtReal x);

// q-exponential [1 + (1-q)x]_+^(1/(1-q)).
// q < 1: zero at and below x = -1/(1-q). q > 1: +inf at and above x = 1/(q-1).
ExtReal exp_q(QParam q, ExtReal x);

// ln_q(xy) - [ln_q x + ln_q y + (1-q) ln_q x ln_q y]
ExtReal nonadditivity_residual(QParam q, double x, double y);

}  // namespace qdeform
