#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "levytree/error.hpp"
#include "levytree/rng.hpp"
#include "levytree/stats.hpp"

namespace levytree {
namespace {

TEST(McEstimate, Constant) {
  const std::vector<double> v(100, 3.5);
  const MCEstimate e = mc_estimate(v);
  EXPECT_DOUBLE_EQ(e.mean, 3.5);
  EXPECT_DOUBLE_EQ(e.standard_error, 0.0);
}

TEST(McEstimate, Alternating) {
  std::vector<double> v(10000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i % 2);
  const MCEstimate e = mc_estimate(v);
  EXPECT_DOUBLE_EQ(e.mean, 0.5);
  const double n = 10000.0;
  EXPECT_NEAR(e.standard_error, std::sqrt(0.25 * n / (n - 1) / n), 1e-15);
  EXPECT_NEAR(e.ci_low, 0.5 - 1.96 * e.standard_error, 1e-15);
}

TEST(McEstimate, PermutationInvariant) {
  RngStream rng(1, 0);
  std::vector<double> v(1000);
  for (double& x : v) x = rng.exponential();
  const MCEstimate a = mc_estimate(v);
  std::reverse(v.begin(), v.end());
  const MCEstimate b = mc_estimate(v);
  EXPECT_NEAR(a.mean, b.mean, 1e-14);
  EXPECT_NEAR(a.standard_error, b.standard_error, 1e-14);
  EXPECT_THROW(mc_estimate(std::vector<double>{1.0}), InsufficientDataError);
}

TEST(PairwiseSum, Accurate) {
  std::vector<double> v(1 << 20, 0.1);
  EXPECT_NEAR(pairwise_sum(v), 0.1 * static_cast<double>(v.size()), 1e-8);
}

TEST(KsTwoSample, IdenticalAndShifted) {
  RngStream rng(2, 0);
  std::vector<double> a(10000), b(10000);
  for (double& x : a) x = rng.uniform();
  for (double& x : b) x = 0.5 + rng.uniform();
  EXPECT_DOUBLE_EQ(ks_two_sample(a, a).statistic, 0.0);
  const KsResult r = ks_two_sample(a, b);
  EXPECT_NEAR(r.statistic, 0.5, 0.03);
  EXPECT_LT(r.p_value, 1e-10);
  EXPECT_THROW(ks_two_sample(std::vector<double>(10, 1.0), a), InsufficientDataError);
}

TEST(KsTwoSample, SplitHalfCalibration) {
  int rejected = 0;
  const int seeds = 400;
  for (int s = 0; s < seeds; ++s) {
    RngStream rng(3, static_cast<std::uint64_t>(s));
    std::vector<double> a(1000), b(1000);
    for (double& x : a) x = rng.normal();
    for (double& x : b) x = rng.normal();
    rejected += ks_two_sample(a, b).p_value < 0.01 ? 1 : 0;
  }
  EXPECT_LE(rejected, 12);  // about 4 expected
}

TEST(Kolmogorov, Survival) {
  EXPECT_NEAR(kolmogorov_survival(1.36), 0.049, 1e-3);
  EXPECT_NEAR(kolmogorov_survival(0.0), 1.0, 1e-12);
  EXPECT_LT(kolmogorov_survival(3.0), 1e-6);
}

TEST(Correlation, Basics) {
  const std::vector<double> x{1, 2, 3, 4, 5};
  const std::vector<double> y{2, 4, 6, 8, 10};
  const std::vector<double> z{25, 16, 9, 4, 1};
  EXPECT_NEAR(correlation(x, y), 1.0, 1e-15);
  EXPECT_NEAR(rank_correlation(x, z), -1.0, 1e-15);
  EXPECT_DOUBLE_EQ(correlation(x, std::vector<double>(5, 1.0)), 0.0);
  EXPECT_THROW(correlation(x, std::vector<double>{1, 2}), ValidationError);
  const std::vector<double> ties{1, 1, 2, 2, 3};
  EXPECT_GT(rank_correlation(x, ties), 0.9);
}

TEST(TotalVariation, Basics) {
  EXPECT_DOUBLE_EQ(total_variation(std::vector<double>{0.5, 0.5}, std::vector<double>{0.5, 0.5}), 0.0);
  EXPECT_DOUBLE_EQ(total_variation(std::vector<double>{1.0}, std::vector<double>{0.0, 1.0}), 1.0);
}

}  // namespace
}  // namespace levytree
