#pragma once

#include <cmath>
#include <limits>

namespace qdeform::detail {

inline constexpr double inf = std::numeric_limits<double>::infinity();
inline constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// ln_q from l = ln x
inline double lnq(double omq, double l) {
  if (omq == 0.0) return l;
  return std::expm1(omq * l) / omq;
}

// exp_q on doubles with cutoff and divergence
inline double expq(double omq, double x) {
  if (omq == 0.0) return std::exp(x);
  const double b = omq * x;
  if (b <= -1.0) return omq > 0.0 ? 0.0 : inf;
  return std::exp(std::log1p(b) / omq);
}

// [1 + u]_+^(1/(1-q)) given u = (1-q)*(something)
inline double bracket_pow(double omq, double u) {
  if (omq == 0.0) return std::exp(u);
  if (u <= -1.0) return omq > 0.0 ? 0.0 : inf;
  return std::exp(std::log1p(u) / omq);
}

// ln [1 + u]_+ / (1-q)
inline double log_bracket(double omq, double u) {
  if (omq == 0.0) return u;
  if (u <= -1.0) return omq > 0.0 ? -inf : inf;
  return std::log1p(u) / omq;
}

inline double qexpm1(double omq, double x) {
  if (omq == 0.0) return x;
  return std::expm1(omq * x) / omq;
}

}  // namespace qdeform::detail
