#pragma once

#include <functional>

namespace qdeform {

struct Quadrature {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  bool ok = false;
};

// Globally adaptive Gauss-Kronrod 7/15 on a finite [a, b]. Stops when the summed error estimate
// drops below max(abs_tol, rel_tol*|I|); reports failure past max_intervals or
// on a non-finite integrand value.
Quadrature integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-10,
                     double rel_tol = 1e-12, int max_intervals = 500);

}  // namespace qdeform
