#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qdeform/ext_real.hpp"
#include "qdeform/numbers.hpp"
#include "qdeform/qparam.hpp"

namespace qdeform {

// Probability vector with Boltzmann constant k. Entries in [0,1], sum 1 within 1e-12.
class Distribution {
 public:
  explicit Distribution(std::vector<double> p, double k = 1.0);
  static Distribution uniform(std::size_t w, double k = 1.0);

  const std::vector<double>& probs() const { return p_; }
  std::size_t size() const { return p_.size(); }
  double k() const { return k_; }
  Distribution with_zero() const;  // append an impossible event

 private:
  std::vector<double> p_;
  double k_;
};

// Compensated sum.
double neumaier_sum(const std::vector<double>& v);

double g(const Distribution& dist, double alpha);  // sum p^alpha over nonzero p
double s1(const Distribution& dist);
double s_tsallis(const Distribution& dist, QParam q);  // -k sum p^q ln_q p
double renyi(const Distribution& dist, QParam q);      // k ln(sum p^q)/(1-q)

// (f(Qx) - f(x))/(Qx - x); central difference when Q = 1.
ExtReal jackson_d(const std::function<double(double)>& f, double Q, double x);
ExtReal s_via_jackson(const Distribution& dist, QParam q);

// Deformed generator sum_i p_i ^alpha in class d, and the entropy it induces.
ExtReal g_delta(Deform d, QParam q, const Distribution& dist, double alpha);
ExtReal s_delta_closed(Deform d, QParam q, const Distribution& dist);
ExtReal s_delta_via_generator(Deform d, QParam q, const Distribution& dist);

// Deformed derivatives of the ordinary generator at alpha = 1 against h(1)^eta S1,
// eta = -1 (linear) or +1 (nonlinear).
ExtReal collapse_residual(Deform d, bool linear, QParam q, const Distribution& dist);

// S^R = [S_q]_q and S_q = _q[S^R].
ExtReal renyi_relation_residual(const Distribution& dist, QParam q);

enum class Curvature : unsigned char { concave, convex, indefinite, flat };
std::string_view name(Curvature c);

struct AdmissibilityReport {
  Deform cls;
  double q;
  int resolution;
  ExtReal certainty;
  double min_value;
  bool nonnegative;
  bool certainty_zero;
  bool expansible;
  Curvature curvature;
  int convex_points;
  int concave_points;
  int finite_points;
};

// Two-state scan p in [0,1]. Curvature comes from second differences (tolerance
// 1e-9) over the open interval; stencils touching p = 0 or 1 are left out.
AdmissibilityReport admissibility_report(Deform d, QParam q, int resolution = 1001);

struct Extensivity {
  ExtReal lhs;  // k ln_q(W1 ^N in oel)
  ExtReal rhs;  // N k ln_q W1
};
Extensivity extensivity_demo(QParam q, double w1, double n, double k = 1.0);

struct IdentityResult {
  std::string id;
  ExtReal residual;
  bool skipped = false;
  std::string skip_reason;  // "cutoff" or "collar"
};

// Logarithm and exponential rules linking the deformed arithmetics. The
// logarithmic rules need x, y > 0; power rules take y as the exponent.
std::vector<IdentityResult> identity_suite(QParam q, double x, double y);
std::vector<std::string> identity_ids();

}  // namespace qdeform
