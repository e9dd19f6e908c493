#pragma once

#include <map>
#include <string>

namespace levytree {

// Special functions. Thin wrappers over the C++ standard library that turn
// poles and invalid arguments into DomainError.

double log_gamma(double x);
/// Gamma function, including negative non-integers through reflection.
double gamma_fn(double x);
/// Beta function B(a, b) for a, b > 0, evaluated in log space.
double beta_fn(double a, double b);
double log_beta(double a, double b);

/// A named reference value, as printed by the `oracle` subcommand.
struct OracleValue {
  enum class Method { kClosedForm, kQuadrature };

  std::string name;
  std::map<std::string, double> params;
  double value = 0.0;
  Method method = Method::kClosedForm;
  double abs_error = 0.0;
};

/// Expected value of the integral of H(x)^{-p} against the mass measure of the
/// normalized stable tree:
///   (gamma-1) gamma^{p-1} Gamma(1-1/gamma) Gamma(2-p) / Gamma(1-(p-1)(1-1/gamma)).
/// p = -1 gives E[H(U)], p = -2 gives E[H(U)^2]. Throws DomainError for p >= 2.
double height_moment(double gamma, double p);

/// E[Z_{alpha,0}] = B(alpha + 1 - 1/gamma, 1 - 1/gamma) / |Gamma(-1/gamma)|.
double mean_z_alpha0(double gamma, double alpha);

/// Right-hand side of the second-moment identity for g(a) = a^alpha, i.e.
/// the expected mass integral of (int_0^{H(x)} sigma_{r,x}^alpha dr)^2.
struct SecondMoment {
  double closed_form = 0.0;
  double quadrature = 0.0;
  double quadrature_error = 0.0;
};

/// 2 / (gamma^2 Gamma(1-1/gamma)^2) B(2 alpha + 2 - 2/gamma, 1 - 1/gamma)
///   * B(alpha + 1 - 1/gamma, 1 - 1/gamma).
double second_moment_closed_form(double gamma, double alpha);
/// Nested double-exponential quadrature of the double integral
///   int_0^1 y^alpha (1-y)^{-1/gamma} int_0^y z^{alpha-1/gamma} (y-z)^{-1/gamma} dz dy
/// times the same prefactor. Throws NumericalError if the error estimate
/// exceeds 1e-8.
double second_moment_quadrature(double gamma, double alpha, double* abs_error = nullptr);
/// Both routes. Throws NumericalError if they disagree by more than 1e-8.
SecondMoment second_moment_rhs(double gamma, double alpha);

/// (1 / (gamma Gamma(1-1/gamma))) int_0^1 a^{alpha - 1/gamma} (1-a)^{-1/gamma} da
/// by quadrature; equals E[Z_{alpha,0}] through the first-moment disintegration.
double first_moment_psi_rhs(double gamma, double alpha, double* abs_error = nullptr);

/// Gamma(p+1) / Gamma(p(1-1/gamma)+1): moments of gamma H(U) under the
/// H(U)^{-1}-tilted law. Throws DomainError for p <= -1.
double mittag_leffler_moment(double gamma, double p);

/// E[S_1^p] for the subordinator with Laplace exponent gamma lambda^{1-1/gamma}:
///   gamma^{p gamma/(gamma-1)} Gamma(1 - p gamma/(gamma-1)) / Gamma(1-p).
/// Throws DomainError for p >= 1 - 1/gamma.
double subordinator_moment(double gamma, double p);

/// Laplace exponent gamma lambda^{1-1/gamma}.
double laplace_exponent(double gamma, double lambda);

/// Dispatches by name for the command-line tool. Recognized names:
/// height_moment(gamma, p), mean_z_alpha0(gamma, alpha),
/// second_moment_rhs(gamma, alpha), first_moment_psi_rhs(gamma, alpha),
/// mittag_leffler_moment(gamma, p), subordinator_moment(gamma, p).
/// Throws ConfigError for unknown names or missing parameters.
OracleValue evaluate_oracle(const std::string& name, const std::map<std::string, double>& params);

std::string to_string(OracleValue::Method method);

}  // namespace levytree
