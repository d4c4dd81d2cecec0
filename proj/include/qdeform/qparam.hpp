#pragma once

#include <cmath>
#include <stdexcept>

namespace qdeform {

inline constexpr double classical_band = 1e-12;

// Entropic index. Within classical_band of 1 every operation takes the q = 1 branch.
class QParam {
 public:
  QParam(double q) : q_(q) {  // NOLINT: implicit by design
    if (!std::isfinite(q)) throw std::invalid_argument("q must be finite");
    classical_ = std::abs(q - 1.0) <= classical_band;
  }

  double value() const { return q_; }
  double omq() const { return classical_ ? 0.0 : 1.0 - q_; }
  double dual() const { return 2.0 - q_; }
  bool classical() const { return classical_; }
  bool below_one() const { return !classical_ && q_ < 1.0; }
  bool above_one() const { return !classical_ && q_ > 1.0; }

 private:
  double q_;
  bool classical_;
};

}  // namespace qdeform
