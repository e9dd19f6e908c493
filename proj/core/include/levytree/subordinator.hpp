#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "levytree/rng.hpp"

namespace levytree {

/// Stable subordinator with Laplace exponent phi(lambda) = gamma lambda^{1-1/gamma}
/// observed on the grid 0, delta, 2 delta, ...
struct SubordinatorPath {
  double gamma = 2.0;
  double delta = 1e-3;
  std::vector<double> values;  // values[k] = S_{k delta}, values[0] = 0

  double horizon() const noexcept {
    return values.empty() ? 0.0 : delta * static_cast<double>(values.size() - 1);
  }
  /// S at the last grid time <= t (t beyond the horizon returns the last value).
  double at(double t) const;
};

/// Exact draw of S_t = (gamma t)^{1/a} X, a = 1 - 1/gamma, X standard positive a-stable.
double sample_marginal(double gamma, double t, RngStream& rng);

/// Grid path extended until exp(-S_T) < tol * gamma, i.e. until the expected
/// remaining integral of exp(-S) is below tol. Throws SamplingError after
/// 10^7 steps.
SubordinatorPath sample_path(double gamma, double delta, double horizon_tol, RngStream& rng);

/// Riemann brackets for int_0^inf exp(-S_t - c t / H) dt.
struct LimitSample {
  double lower = 0.0;
  double upper = 0.0;
  double estimate = 0.0;  // midpoint
  double c = 0.0;
  double height = 1.0;
  std::size_t steps = 0;
};

/// The integrand is nonincreasing, so left and right Riemann sums bracket the
/// integral over [0, T]; the conditional mean of the remainder,
/// exp(-S_T - c T / H) / (gamma + c / H), is added to the upper bracket.
/// The path stops once that remainder is below tol. Throws DomainError for
/// c > 0 with H <= 0, and SamplingError after 10^7 steps.
LimitSample limit_integral(double gamma, double c, double height, double delta, double tol,
                           RngStream& rng);

/// Several functionals of one path: an integral for every (c, H) pair and the
/// marginal S_t for every requested time. Cells are split at the requested
/// times, so the marginals are exact draws.
struct PathFunctionals {
  std::vector<LimitSample> integrals;
  std::vector<double> marginals;
};

struct RatePair {
  double c = 0.0;
  double height = 1.0;
};

PathFunctionals path_functionals(double gamma, std::span<const RatePair> rates,
                                 std::span<const double> times, double delta, double tol,
                                 RngStream& rng);

}  // namespace levytree
