#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qdeform/ext_real.hpp"
#include "qdeform/qparam.hpp"

namespace qdeform {

// Deformed number classes: inner/outer x logarithm-exponential/exponential-logarithm.
//   ile [x]_q  = ln exp_q x      ole _q[x] = ln_q exp x
//   iel {x}_q  = exp ln_q x      oel _q{x} = exp_q ln x
enum class Deform : unsigned char { ile, ole, iel, oel };
enum class Family : unsigned char { le, el };
enum class Side : unsigned char { i, o };

inline constexpr Deform all_deforms[] = {Deform::ile, Deform::ole, Deform::iel, Deform::oel};

constexpr Family family(Deform d) { return d == Deform::ile || d == Deform::ole ? Family::le : Family::el; }
constexpr Side side(Deform d) { return d == Deform::ile || d == Deform::iel ? Side::i : Side::o; }
constexpr Deform make_deform(Family f, Side s) {
  if (f == Family::le) return s == Side::i ? Deform::ile : Deform::ole;
  return s == Side::i ? Deform::iel : Deform::oel;
}
// Inverse partner: ile <-> ole, iel <-> oel.
constexpr Deform complement(Deform d) {
  return make_deform(family(d), side(d) == Side::i ? Side::o : Side::i);
}

std::string_view name(Deform d);
std::optional<Deform> parse_deform(std::string_view s);

// Closed form. Built with QDEFORM_ORACLE_CHECKS it is cross-checked against
// deform_composed and throws std::logic_error on disagreement.
ExtReal deform(Deform d, QParam q, ExtReal x);

// Literal composition of ln, exp, ln_q, exp_q.
ExtReal deform_composed(Deform d, QParam q, ExtReal x);

// Inverse map; undefined outside the image of d.
ExtReal undeform(Deform d, QParam q, ExtReal y);

// Argument of the [.]_+ bracket the class applies at x (1 + (1-q)x or 1 + (1-q)ln|x|).
double bracket(Deform d, QParam q, double x);

struct FixedPoints {
  std::vector<double> points;
  std::vector<double> residuals;
  bool zero_undefined = false;
};

// q != 1
FixedPoints fixed_points(Deform d, QParam q);

enum class Identity : unsigned char { log_ile, log_ole, qlog_ile, qlog_ole, exp_iel, exp_oel, qexp_iel, qexp_oel };

inline constexpr Identity all_identities[] = {Identity::log_ile,  Identity::log_ole,  Identity::qlog_ile,
                                              Identity::qlog_ole, Identity::exp_iel,  Identity::exp_oel,
                                              Identity::qexp_iel, Identity::qexp_oel};

std::string_view name(Identity id);

// Largest pairwise residual among the sides of the identity.
//   log_ile   [ln x]_q = ln _q{x}
//   log_ole   _q[ln x] = ln {x}_q = ln_q x
//   qlog_ile  [ln_q x]_q = ln_q _q{x} = ln x
//   qlog_ole  _q[ln_q x] = ln_q {x}_q
//   exp_iel   {exp x}_q = exp _q[x]
//   exp_oel   _q{exp x} = exp [x]_q = exp_q x
//   qexp_iel  {exp_q x}_q = exp_q _q[x] = exp x
//   qexp_oel  _q{exp_q x} = exp_q [x]_q
// Logarithmic identities need x > 0.
ExtReal identity_residual(Identity id, QParam q, double x);

// Two-parameter numbers: le ln_q exp_q2 x, el exp_q ln_q2 x (x >= 0).
ExtReal deform2(Family f, QParam q, QParam q2, ExtReal x);

}  // namespace qdeform
