#include "levytree/stable.hpp"

#include <cmath>
#include <numbers>

#include "levytree/error.hpp"

namespace levytree {

PositiveStable::PositiveStable(double a) : a_(a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("positive stable index must lie in (0, 1)");
  sin_power_ = a / (1.0 - a);
  base_power_ = 1.0 / (1.0 - a);
  outer_power_ = (1.0 - a) / a;
}

double PositiveStable::operator()(RngStream& rng) const {
  constexpr double pi = std::numbers::pi;
  if (a_ == 0.5) {
    // Kanter's formula collapses to 1 / (4 W cos^2(pi U / 2)), and
    // 2 W cos^2(pi U / 2) is the square of a standard normal.
    const double z = rng.normal();
    return 0.5 / (z * z);
  }
  const double u = rng.uniform();
  const double w = rng.exponential();
  const double zolotarev = std::pow(std::sin(a_ * pi * u), sin_power_) *
                           std::sin((1.0 - a_) * pi * u) /
                           std::pow(std::sin(pi * u), base_power_);
  return std::pow(zolotarev / w, outer_power_);
}

double sample_positive_stable(double a, RngStream& rng) { return PositiveStable(a)(rng); }

}  // namespace levytree
