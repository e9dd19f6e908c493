#include "levytree/offspring.hpp"

#include <algorithm>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <numeric>

#include "levytree/error.hpp"
#include "levytree/tree.hpp"

namespace levytree {

OffspringLaw OffspringLaw::geometric() { return OffspringLaw(Kind::kGeometric, 2.0); }

OffspringLaw OffspringLaw::zipf(double gamma) {
  if (!(gamma > 1.0 && gamma < 2.0)) {
    throw DomainError("zipf offspring law needs gamma in (1, 2)");
  }
  OffspringLaw law(Kind::kZipf, gamma);
  law.zeta_gamma_ = boost::math::zeta(gamma);
  law.p_zero_ = 1.0 - boost::math::zeta(1.0 + gamma) / law.zeta_gamma_;
  return law;
}

OffspringLaw OffspringLaw::table(double gamma, std::vector<double> probabilities) {
  require_stability_index(gamma);
  if (probabilities.empty()) throw ValidationError("offspring table is empty");
  double total = 0.0;
  double mean = 0.0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (!(probabilities[k] >= 0.0)) throw ValidationError("offspring probabilities must be >= 0");
    total += probabilities[k];
    mean += static_cast<double>(k) * probabilities[k];
  }
  if (std::abs(total - 1.0) > 1e-12) throw ValidationError("offspring probabilities must sum to 1");
  if (std::abs(mean - 1.0) > 1e-12) throw ValidationError("offspring law must be critical (mean 1)");
  OffspringLaw law(Kind::kTable, gamma);
  law.probs_ = std::move(probabilities);
  law.cdf_.resize(law.probs_.size());
  std::partial_sum(law.probs_.begin(), law.probs_.end(), law.cdf_.begin());
  return law;
}

OffspringLaw OffspringLaw::for_gamma(double gamma) {
  require_stability_index(gamma);
  return gamma == 2.0 ? geometric() : zipf(gamma);
}

OffspringLaw OffspringLaw::by_name(const std::string& name, double gamma) {
  if (name == "default") return for_gamma(gamma);
  if (name == "geometric") {
    if (gamma != 2.0) throw DomainError("geometric offspring law is only attracted to gamma = 2");
    return geometric();
  }
  if (name == "zipf") return zipf(gamma);
  throw ConfigError("unknown offspring law '" + name + "'");
}

std::string OffspringLaw::name() const {
  switch (kind_) {
    case Kind::kGeometric: return "geometric";
    case Kind::kZipf: return "zipf";
    case Kind::kTable: return "table";
  }
  return "unknown";
}

double OffspringLaw::pmf(std::uint64_t k) const {
  switch (kind_) {
    case Kind::kGeometric: return std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(k, 2000)) - 1);
    case Kind::kZipf:
      return k == 0 ? p_zero_ : std::pow(static_cast<double>(k), -1.0 - gamma_) / zeta_gamma_;
    case Kind::kTable: return k < probs_.size() ? probs_[k] : 0.0;
  }
  return 0.0;
}

std::vector<double> OffspringLaw::pmf_table(std::size_t count) const {
  std::vector<double> p(count);
  for (std::size_t k = 0; k < count; ++k) p[k] = pmf(k);
  return p;
}

std::uint64_t OffspringLaw::sample_zipf_tail(RngStream& rng) const {
  // Devroye's rejection sampler for P(X = k) proportional to k^{-s}, k >= 1.
  const double s_minus_1 = gamma_;
  const double b = std::pow(2.0, s_minus_1);
  for (;;) {
    const double u = rng.uniform();
    const double v = rng.uniform();
    const double x = std::floor(std::pow(u, -1.0 / s_minus_1));
    if (!(x < 0x1.0p62)) continue;
    const double t = std::pow(1.0 + 1.0 / x, s_minus_1);
    if (v * x * (t - 1.0) / (b - 1.0) <= t / b) return static_cast<std::uint64_t>(x);
  }
}

std::uint64_t OffspringLaw::sample(RngStream& rng) const {
  switch (kind_) {
    case Kind::kGeometric:
      return static_cast<std::uint64_t>(std::floor(-std::log2(rng.uniform())));
    case Kind::kZipf:
      return rng.uniform() < p_zero_ ? 0 : sample_zipf_tail(rng);
    case Kind::kTable: {
      const double u = rng.uniform() * cdf_.back();
      const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
      return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf_.begin(), cdf_.size() - 1));
    }
  }
  return 0;
}

}  // namespace levytree
