#pragma once

// Reference evaluations in long double, written straight from the defining
// formulas and sharing no code with the library.

#include <cmath>
#include <limits>

namespace oracle {

using R = long double;

inline R inf() { return std::numeric_limits<R>::infinity(); }

inline R ln_q(R q, R x) {
  if (q == 1) return std::log(x);
  return (std::pow(x, 1 - q) - 1) / (1 - q);
}

inline R exp_q(R q, R x) {
  if (q == 1) return std::exp(x);
  const R b = 1 + (1 - q) * x;
  if (b <= 0) return q < 1 ? 0 : inf();
  return std::pow(b, 1 / (1 - q));
}

inline R sgn(R x) { return (x > 0) - (x < 0); }

inline R ile(R q, R x) { return std::log(exp_q(q, x)); }
inline R ole(R q, R x) { return ln_q(q, std::exp(x)); }
inline R iel(R q, R x) { return sgn(x) * std::exp(ln_q(q, std::fabs(x))); }
inline R oel(R q, R x) { return sgn(x) * exp_q(q, std::log(std::fabs(x))); }

// relative residual with unit floor
inline double rel(R a, R b) {
  if (std::isinf(a) && std::isinf(b) && (a > 0) == (b > 0)) return 0.0;
  const R s = std::max<R>({R(1), std::fabs(a), std::fabs(b)});
  return static_cast<double>(std::fabs(a - b) / s);
}

// Tsallis entropy in its sum-of-powers form
template <class V>
R tsallis(R q, const V& p) {
  R s = 0;
  if (q == 1) {
    for (R pi : p)
      if (pi > 0) s -= pi * std::log(pi);
    return s;
  }
  for (R pi : p)
    if (pi > 0) s += std::pow(pi, q);
  return (1 - s) / (q - 1);
}

// Simpson on n (even) panels
template <class F>
R simpson(F f, R a, R b, int n = 20000) {
  const R h = (b - a) / n;
  R s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(a + i * h);
  return s * h / 3;
}

}  // namespace oracle
