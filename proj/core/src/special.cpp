#include <cmath>
#include <string>

#include "levytree/error.hpp"
#include "levytree/oracles.hpp"

namespace levytree {

namespace {

void reject_pole(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma function argument must be finite");
  if (x <= 0.0 && x == std::floor(x)) {
    throw DomainError("gamma function pole at " + std::to_string(x));
  }
}

}  // namespace

double log_gamma(double x) {
  reject_pole(x);
  return std::lgamma(x);
}

double gamma_fn(double x) {
  reject_pole(x);
  return std::tgamma(x);
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta function needs positive arguments");
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta_fn(double a, double b) { return std::exp(log_beta(a, b)); }

}  // namespace levytree
