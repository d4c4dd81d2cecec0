#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string_view>

namespace qdeform {

enum class Reason : std::uint8_t {
  none,
  invalid_input,
  negative_argument,
  zero_argument,
  not_in_image,
  pole,
  division_by_zero,
  no_element,
  cutoff,
  quadrature_failed,
  not_resolved,
};

std::string_view reason_name(Reason r);

// Real number extended with +inf, -inf and an explicit undefined state.
class ExtReal {
 public:
  enum class Kind : std::uint8_t { finite, pos_inf, neg_inf, undefined };

  constexpr ExtReal() = default;
  constexpr ExtReal(double v) {  // NOLINT: implicit by design
    if (std::isnan(v)) {
      kind_ = Kind::undefined;
      reason_ = Reason::invalid_input;
    } else if (std::isinf(v)) {
      kind_ = v > 0 ? Kind::pos_inf : Kind::neg_inf;
    } else {
      value_ = v;
    }
  }

  static constexpr ExtReal pos_inf() { return ExtReal(Kind::pos_inf, Reason::none); }
  static constexpr ExtReal neg_inf() { return ExtReal(Kind::neg_inf, Reason::none); }
  static constexpr ExtReal undefined(Reason why) { return ExtReal(Kind::undefined, why); }

  constexpr Kind kind() const { return kind_; }
  constexpr Reason reason() const { return reason_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_inf() const { return kind_ == Kind::pos_inf || kind_ == Kind::neg_inf; }
  constexpr bool is_undefined() const { return kind_ == Kind::undefined; }
  constexpr bool is_defined() const { return kind_ != Kind::undefined; }

  // IEEE view: infinities map to +-inf, undefined to NaN.
  constexpr double value() const {
    switch (kind_) {
      case Kind::finite: return value_;
      case Kind::pos_inf: return std::numeric_limits<double>::infinity();
      case Kind::neg_inf: return -std::numeric_limits<double>::infinity();
      default: return std::numeric_limits<double>::quiet_NaN();
    }
  }

  friend bool same(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::finite || a.value_ == b.value_;
  }

 private:
  constexpr ExtReal(Kind k, Reason r) : kind_(k), reason_(r) {}

  Kind kind_ = Kind::finite;
  Reason reason_ = Reason::none;
  double value_ = 0.0;
};

ExtReal operator+(const ExtReal& a, const ExtReal& b);
ExtReal operator-(const ExtReal& a, const ExtReal& b);
ExtReal operator*(const ExtReal& a, const ExtReal& b);
ExtReal operator/(const ExtReal& a, const ExtReal& b);
ExtReal operator-(const ExtReal& a);

namespace ext {

ExtReal exp(const ExtReal& x);
ExtReal log(const ExtReal& x);  // log 0 = -inf, negative arguments undefined
ExtReal abs(const ExtReal& x);
ExtReal pow(const ExtReal& base, double e);  // base >= 0
int sign(const ExtReal& x);                  // 0 for zero and undefined

}  // namespace ext

inline int sign(double x) { return (x > 0) - (x < 0); }

// |a-b| / max(1, |a|, |b|). Matching infinities give 0, mismatched kinds +inf,
// undefined on either side undefined.
ExtReal residual(const ExtReal& a, const ExtReal& b);

}  // namespace qdeform
