#include "levytree/subordinator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "levytree/error.hpp"
#include "levytree/stable.hpp"
#include "levytree/tree.hpp"

namespace levytree {

namespace {

constexpr std::size_t kMaxSteps = 10'000'000;

void check_grid(double delta, double tol) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("grid step delta must be positive");
  if (!(tol > 0.0 && tol < 1.0)) throw DomainError("horizon tolerance must lie in (0, 1)");
}

// Increment of S over a time step dt is (gamma dt)^{1/a} X.
struct IncrementSampler {
  explicit IncrementSampler(double gamma) : a(1.0 - 1.0 / gamma), gamma(gamma), stable(a) {}
  double operator()(double dt, RngStream& rng) const {
    return std::pow(gamma * dt, 1.0 / a) * stable(rng);
  }
  double a;
  double gamma;
  PositiveStable stable;
};

}  // namespace

double SubordinatorPath::at(double t) const {
  if (values.empty()) throw DomainError("empty subordinator path");
  if (!(t >= 0.0)) throw DomainError("path time must be nonnegative");
  const auto k = static_cast<std::size_t>(std::floor(t / delta));
  return values[std::min(k, values.size() - 1)];
}

double sample_marginal(double gamma, double t, RngStream& rng) {
  require_stability_index(gamma);
  if (!(t >= 0.0)) throw DomainError("time must be nonnegative");
  if (t == 0.0) return 0.0;
  return IncrementSampler(gamma)(t, rng);
}

SubordinatorPath sample_path(double gamma, double delta, double horizon_tol, RngStream& rng) {
  require_stability_index(gamma);
  check_grid(delta, horizon_tol);
  const IncrementSampler increment(gamma);
  SubordinatorPath path;
  path.gamma = gamma;
  path.delta = delta;
  path.values.push_back(0.0);
  const double scale = std::pow(gamma * delta, 1.0 / increment.a);
  double s = 0.0;
  while (!(std::exp(-s) < horizon_tol * gamma)) {
    if (path.values.size() > kMaxSteps) {
      throw SamplingError("subordinator path did not reach the horizon within 10^7 steps");
    }
    s += scale * increment.stable(rng);
    path.values.push_back(s);
  }
  return path;
}

PathFunctionals path_functionals(double gamma, std::span<const RatePair> rates,
                                 std::span<const double> times, double delta, double tol,
                                 RngStream& rng) {
  require_stability_index(gamma);
  check_grid(delta, tol);
  std::vector<double> rate(rates.size());
  for (std::size_t i = 0; i < rates.size(); ++i) {
    if (!(rates[i].c >= 0.0)) throw DomainError("c must be nonnegative");
    if (rates[i].c > 0.0 && !(rates[i].height > 0.0)) throw DomainError("H must be positive when c > 0");
    rate[i] = rates[i].c > 0.0 ? rates[i].c / rates[i].height : 0.0;
  }
  std::vector<std::size_t> order(times.size());
  std::iota(order.begin(), order.end(), 0);
  for (const double t : times) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("observation times must be nonnegative");
  }
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return times[x] < times[y]; });

  const IncrementSampler increment(gamma);
  const double grid_scale = std::pow(gamma * delta, 1.0 / increment.a);

  PathFunctionals out;
  out.integrals.resize(rates.size());
  out.marginals.assign(times.size(), 0.0);
  std::vector<double> level(rates.size(), 1.0);  // integrand at the current time

  std::size_t next_obs = 0;
  while (next_obs < order.size() && times[order[next_obs]] == 0.0) out.marginals[order[next_obs++]] = 0.0;

  std::size_t k = 0;  // grid index of the last grid time passed
  double t = 0.0;
  double s = 0.0;
  std::size_t steps = 0;
  for (;;) {
    bool done = next_obs == order.size();
    for (std::size_t i = 0; done && i < rates.size(); ++i) {
      done = level[i] / (gamma + rate[i]) < tol;
    }
    if (done) break;
    if (++steps > kMaxSteps) {
      throw SamplingError("subordinator path did not reach the horizon within 10^7 steps");
    }

    const double grid_next = static_cast<double>(k + 1) * delta;
    double next = grid_next;
    bool on_grid = true;
    if (next_obs < order.size()) {
      const double obs = times[order[next_obs]];
      if (obs < grid_next - 1e-9 * delta) {
        next = obs;
        on_grid = false;
      }
    }
    const double dt = next - t;
    s += on_grid && t == static_cast<double>(k) * delta ? grid_scale * increment.stable(rng)
                                                        : increment(dt, rng);
    if (on_grid) ++k;
    t = next;
    for (std::size_t i = 0; i < rates.size(); ++i) {
      const double f = std::exp(-s - rate[i] * t);
      out.integrals[i].upper += dt * level[i];
      out.integrals[i].lower += dt * f;
      level[i] = f;
    }
    while (next_obs < order.size() && times[order[next_obs]] <= t + 1e-9 * delta) {
      out.marginals[order[next_obs++]] = s;
    }
  }

  for (std::size_t i = 0; i < rates.size(); ++i) {
    LimitSample& r = out.integrals[i];
    r.upper += level[i] / (gamma + rate[i]);
    r.estimate = 0.5 * (r.lower + r.upper);
    r.c = rates[i].c;
    r.height = rates[i].height;
    r.steps = steps;
  }
  return out;
}

LimitSample limit_integral(double gamma, double c, double height, double delta, double tol,
                           RngStream& rng) {
  const RatePair pair{c, height};
  return path_functionals(gamma, std::span<const RatePair>(&pair, 1), {}, delta, tol, rng)
      .integrals.front();
}

}  // namespace levytree
