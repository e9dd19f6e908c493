#pragma once

#include <cstddef>
#include <span>

namespace levytree {

struct MCEstimate {
  std::size_t n = 0;
  double mean = 0.0;
  /// Sample standard deviation over sqrt(n).
  double standard_error = 0.0;
  double ci_low = 0.0;   // mean - 1.96 standard_error
  double ci_high = 0.0;  // mean + 1.96 standard_error
};

/// Sample mean and standard error with pairwise summation. Throws
/// InsufficientDataError for fewer than 2 values.
MCEstimate mc_estimate(std::span<const double> values);

/// Pairwise (cascade) sum; O(log n) error growth instead of O(n).
double pairwise_sum(std::span<const double> values);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value (Stephens'
/// small-sample correction). Throws InsufficientDataError if either sample
/// has fewer than 50 values.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Survival function of the Kolmogorov distribution, P(K > x).
double kolmogorov_survival(double x);

/// Pearson correlation. Throws InsufficientDataError for fewer than 2 pairs
/// and ValidationError for mismatched lengths; returns 0 if either sample is
/// constant.
double correlation(std::span<const double> a, std::span<const double> b);

/// Spearman rank correlation: Pearson correlation of average ranks.
double rank_correlation(std::span<const double> a, std::span<const double> b);

/// Half the L1 distance between two probability vectors (the shorter one is
/// padded with zeros).
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace levytree
