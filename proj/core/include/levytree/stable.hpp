#pragma once

#include "levytree/rng.hpp"

namespace levytree {

/// Draws X > 0 with E[exp(-lambda X)] = exp(-lambda^a), a in (0, 1), using
/// Kanter's representation X = (A(U) / W)^{(1-a)/a} with U uniform on (0, 1)
/// and W standard exponential.
class PositiveStable {
 public:
  /// Throws DomainError unless 0 < a < 1.
  explicit PositiveStable(double a);

  double index() const noexcept { return a_; }
  double operator()(RngStream& rng) const;

 private:
  double a_;
  double sin_power_;   // a / (1 - a)
  double base_power_;  // 1 / (1 - a)
  double outer_power_; // (1 - a) / a
};

double sample_positive_stable(double a, RngStream& rng);

}  // namespace levytree
