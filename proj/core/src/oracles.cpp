#include "levytree/oracles.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <string>

#include "levytree/error.hpp"
#include "levytree/tree.hpp"

namespace levytree {

namespace {

constexpr double kQuadratureTolerance = 1e-12;
constexpr double kAcceptedError = 1e-8;

void require_nonnegative(double alpha, const char* name) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError(std::string(name) + " must be finite and nonnegative");
  }
}

double second_moment_prefactor(double gamma) {
  const double g = gamma_fn(1.0 - 1.0 / gamma);
  return 2.0 / (gamma * gamma * g * g);
}

// Double-exponential quadrature on a finite interval; handles the integrable
// endpoint singularities of all integrands below. The integrator is not const
// for two-argument integrands, hence one instance per thread.
template <class F>
double tanh_sinh(F f, double lo, double hi, double* error) {
  thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0.0;
  double l1 = 0.0;
  const double value = integrator.integrate(f, lo, hi, kQuadratureTolerance, &err, &l1);
  if (error != nullptr) *error = err;
  return value;
}

}  // namespace

double height_moment(double gamma, double p) {
  require_stability_index(gamma);
  if (!(p < 2.0)) throw DomainError("height_moment needs p < 2 (the integral diverges otherwise)");
  const double a = 1.0 - 1.0 / gamma;
  return (gamma - 1.0) * std::pow(gamma, p - 1.0) *
         std::exp(log_gamma(a) + log_gamma(2.0 - p) - log_gamma(1.0 - (p - 1.0) * a));
}

double mean_z_alpha0(double gamma, double alpha) {
  require_stability_index(gamma);
  require_nonnegative(alpha, "alpha");
  const double a = 1.0 - 1.0 / gamma;
  // |Gamma(-1/gamma)| = gamma Gamma(1 - 1/gamma)
  return std::exp(log_beta(alpha + a, a) - log_gamma(a)) / gamma;
}

double second_moment_closed_form(double gamma, double alpha) {
  require_stability_index(gamma);
  require_nonnegative(alpha, "alpha");
  const double a = 1.0 - 1.0 / gamma;
  return second_moment_prefactor(gamma) *
         std::exp(log_beta(2.0 * alpha + 2.0 * a, a) + log_beta(alpha + a, a));
}

double second_moment_quadrature(double gamma, double alpha, double* abs_error) {
  require_stability_index(gamma);
  require_nonnegative(alpha, "alpha");
  const double inv = 1.0 / gamma;
  // Inner integral over z in (0, y) of z^{alpha - 1/gamma} (y - z)^{-1/gamma}.
  // Substituting z = y s gives y^{alpha + 1 - 2/gamma} times the same
  // integral over (0, 1), so the double integral factorizes into two
  // one-dimensional quadratures. The second argument of each integrand is the
  // signed distance to the nearest endpoint, which keeps (1 - s) exact near 1.
  auto inner = [&](double s, double sc) {
    const double one_minus_s = sc < 0.0 ? 1.0 - s : sc;
    return std::pow(s, alpha - inv) * std::pow(one_minus_s, -inv);
  };
  const double outer_power = 2.0 * alpha + 1.0 - 2.0 * inv;
  auto outer = [&](double y, double yc) {
    const double one_minus_y = yc < 0.0 ? 1.0 - y : yc;
    return std::pow(y, outer_power) * std::pow(one_minus_y, -inv);
  };
  double inner_err = 0.0;
  double outer_err = 0.0;
  const double inner_value = tanh_sinh(inner, 0.0, 1.0, &inner_err);
  const double outer_value = tanh_sinh(outer, 0.0, 1.0, &outer_err);
  const double prefactor = second_moment_prefactor(gamma);
  const double value = prefactor * inner_value * outer_value;
  const double err = prefactor * (inner_err * outer_value + outer_err * inner_value + inner_err * outer_err);
  if (abs_error != nullptr) *abs_error = err;
  if (!(err <= kAcceptedError) || !std::isfinite(value)) {
    throw NumericalError("second-moment quadrature did not converge: gamma=" + std::to_string(gamma) +
                         " alpha=" + std::to_string(alpha) + " error estimate=" + std::to_string(err));
  }
  return value;
}

SecondMoment second_moment_rhs(double gamma, double alpha) {
  SecondMoment m;
  m.closed_form = second_moment_closed_form(gamma, alpha);
  m.quadrature = second_moment_quadrature(gamma, alpha, &m.quadrature_error);
  if (!(std::abs(m.closed_form - m.quadrature) <= kAcceptedError)) {
    throw NumericalError("second-moment closed form and quadrature disagree: " +
                         std::to_string(m.closed_form) + " vs " + std::to_string(m.quadrature));
  }
  return m;
}

double first_moment_psi_rhs(double gamma, double alpha, double* abs_error) {
  require_stability_index(gamma);
  require_nonnegative(alpha, "alpha");
  const double inv = 1.0 / gamma;
  auto f = [&](double x, double xc) {
    const double one_minus_x = xc < 0.0 ? 1.0 - x : xc;
    return std::pow(x, alpha - inv) * std::pow(one_minus_x, -inv);
  };
  double err = 0.0;
  const double scale = 1.0 / (gamma * gamma_fn(1.0 - inv));
  const double value = scale * tanh_sinh(f, 0.0, 1.0, &err);
  err *= scale;
  if (abs_error != nullptr) *abs_error = err;
  if (!(err <= kAcceptedError) || !std::isfinite(value)) {
    throw NumericalError("first-moment quadrature did not converge: error estimate=" +
                         std::to_string(err));
  }
  return value;
}

double mittag_leffler_moment(double gamma, double p) {
  require_stability_index(gamma);
  if (!(p > -1.0)) throw DomainError("mittag_leffler_moment needs p > -1");
  return std::exp(log_gamma(p + 1.0) - log_gamma(p * (1.0 - 1.0 / gamma) + 1.0));
}

double subordinator_moment(double gamma, double p) {
  require_stability_index(gamma);
  const double a = 1.0 - 1.0 / gamma;
  if (!(p < a)) throw DomainError("subordinator_moment needs p < 1 - 1/gamma (moment is infinite)");
  return std::pow(gamma, p / a) * std::exp(log_gamma(1.0 - p / a) - log_gamma(1.0 - p));
}

double laplace_exponent(double gamma, double lambda) {
  require_stability_index(gamma);
  if (!(lambda >= 0.0)) throw DomainError("Laplace exponent needs lambda >= 0");
  return gamma * std::pow(lambda, 1.0 - 1.0 / gamma);
}

std::string to_string(OracleValue::Method method) {
  return method == OracleValue::Method::kClosedForm ? "closed_form" : "quadrature";
}

OracleValue evaluate_oracle(const std::string& name, const std::map<std::string, double>& params) {
  auto get = [&](const char* key) {
    const auto it = params.find(key);
    if (it == params.end()) {
      throw ConfigError("oracle '" + name + "' needs parameter '" + std::string(key) + "'");
    }
    return it->second;
  };
  OracleValue out;
  out.name = name;
  if (name == "height_moment") {
    out.params = {{"gamma", get("gamma")}, {"p", get("p")}};
    out.value = height_moment(get("gamma"), get("p"));
  } else if (name == "mean_z_alpha0") {
    out.params = {{"gamma", get("gamma")}, {"alpha", get("alpha")}};
    out.value = mean_z_alpha0(get("gamma"), get("alpha"));
  } else if (name == "second_moment_rhs") {
    out.params = {{"gamma", get("gamma")}, {"alpha", get("alpha")}};
    const SecondMoment m = second_moment_rhs(get("gamma"), get("alpha"));
    out.value = m.quadrature;
    out.method = OracleValue::Method::kQuadrature;
    out.abs_error = m.quadrature_error;
  } else if (name == "first_moment_psi_rhs") {
    out.params = {{"gamma", get("gamma")}, {"alpha", get("alpha")}};
    out.value = first_moment_psi_rhs(get("gamma"), get("alpha"), &out.abs_error);
    out.method = OracleValue::Method::kQuadrature;
  } else if (name == "mittag_leffler_moment") {
    out.params = {{"gamma", get("gamma")}, {"p", get("p")}};
    out.value = mittag_leffler_moment(get("gamma"), get("p"));
  } else if (name == "subordinator_moment") {
    out.params = {{"gamma", get("gamma")}, {"p", get("p")}};
    out.value = subordinator_moment(get("gamma"), get("p"));
  } else {
    throw ConfigError("unknown oracle '" + name + "'");
  }
  return out;
}

}  // namespace levytree
