#pragma once

#include <optional>
#include <string_view>

#include "qdeform/ext_real.hpp"
#include "qdeform/numbers.hpp"

namespace qdeform {

enum class Op : unsigned char { add, sub, mul, div };

inline constexpr Op all_ops[] = {Op::add, Op::sub, Op::mul, Op::div};

std::string_view name(Op op);
std::optional<Op> parse_op(std::string_view s);

// Deformed operation from the generating rule: d(c(x) op c(y)), c = complement(d).
ExtReal op_rule(Deform d, Op op, QParam q, ExtReal x, ExtReal y);

// Deformed operation from its explicit closed form (the production path).
// iel/oel add and sub carry the printed sign(x +- y) prefactor.
ExtReal op_closed(Deform d, Op op, QParam q, double x, double y);

// True where the printed sign(x +- y) of iel/oel add/sub differs from the sign
// of the inner sum the generating rule uses.
bool printed_sign_differs(Deform d, Op op, QParam q, double x, double y);

// True where the [.]_+ bracket of the operation is <= 0: the result is cut to 0
// (q < 1) or diverges (q > 1). Only ile and oel operations have such a bracket.
bool in_cutoff(Deform d, Op op, QParam q, double x, double y);

// Special elements. A neutral or absorbing element may be a single point, a
// symmetric interval [-bound, bound], absent, or valid only for |x| < bound.
struct Element {
  enum class Kind : unsigned char { point, interval, none, conditional };
  Kind kind = Kind::point;
  double value = 0.0;
  double bound = 0.0;

  bool exists() const { return kind != Kind::none; }
  bool contains(double v, double tol) const;
  bool applies_to(double x) const;
};

std::string_view name(Element::Kind k);

Element neutral_add(Deform d, QParam q);
Element neutral_mul(Deform d, QParam q);
Element absorbing(Deform d, QParam q);

ExtReal neg(Deform d, QParam q, double y);
ExtReal inv(Deform d, QParam q, double y);

// Times-power x^y in the class, x >= 0 (x = 0 gives the x -> 0+ limit).
ExtReal tpow(Deform d, QParam q, double x, double y);
ExtReal tpow_rule(Deform d, QParam q, ExtReal x, ExtReal y);

// Dot multiplication: y added to itself x times.
ExtReal dot_mul(Deform d, QParam q, double x, double y);
ExtReal dot_rule(Deform d, QParam q, ExtReal x, ExtReal y);
ExtReal dot_one(Deform d, QParam q, double x);

// Two-parameter generating rule <<x>_{q2,q} op <y>_{q2,q}>_{q,q2}.
ExtReal op_rule2(Family f, Op op, QParam q, QParam q2, ExtReal x, ExtReal y);

}  // namespace qdeform
