#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levytree/rng.hpp"

namespace levytree {

/// Critical offspring distribution in the domain of attraction of a
/// gamma-stable law.
///
/// Three families are supported:
///  - geometric: P(k) = 2^{-k-1}, variance 2, used for gamma = 2;
///  - zipf: P(k) = k^{-1-gamma} / zeta(gamma) for k >= 1 and
///    P(0) = 1 - zeta(1 + gamma) / zeta(gamma), gamma in (1, 2), which has
///    mean exactly 1 and a regularly varying tail of index gamma;
///  - table: an explicit finite probability vector (mean must be 1).
class OffspringLaw {
 public:
  enum class Kind { kGeometric, kZipf, kTable };

  static OffspringLaw geometric();
  static OffspringLaw zipf(double gamma);
  /// Throws ValidationError unless probabilities sum to 1 and the mean is 1
  /// (both to 1e-12).
  static OffspringLaw table(double gamma, std::vector<double> probabilities);
  /// Default law for an index: geometric for gamma = 2, zipf otherwise.
  static OffspringLaw for_gamma(double gamma);
  /// "geometric", "zipf" or "default".
  static OffspringLaw by_name(const std::string& name, double gamma);

  Kind kind() const noexcept { return kind_; }
  double gamma() const noexcept { return gamma_; }
  std::string name() const;

  double pmf(std::uint64_t k) const;
  /// P(0), ..., P(count - 1).
  std::vector<double> pmf_table(std::size_t count) const;
  std::uint64_t sample(RngStream& rng) const;

 private:
  OffspringLaw(Kind kind, double gamma) : kind_(kind), gamma_(gamma) {}

  std::uint64_t sample_zipf_tail(RngStream& rng) const;

  Kind kind_;
  double gamma_;
  // zipf
  double zeta_gamma_ = 0.0;
  double p_zero_ = 0.0;
  // table
  std::vector<double> probs_;
  std::vector<double> cdf_;
};

}  // namespace levytree
