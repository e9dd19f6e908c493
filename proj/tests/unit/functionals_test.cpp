#include <gtest/gtest.h>

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <vector>

#include "levytree/error.hpp"
#include "levytree/functionals.hpp"
#include "test_trees.hpp"

namespace levytree {
namespace {

using testing::cherry;
using testing::kCherryL1;

// r -> sigma_{r,x}^alpha H_{r,x}^beta integrated adaptively between the
// heights of the spine vertices, evaluated by brute force from the definition.
double z_leaf_by_quadrature(const WeightedTree& t, VertexId x, const FunctionalParams& p) {
  std::vector<double> breaks{0.0};
  for (const VertexId v : t.ancestral_line(x)) breaks.push_back(t.height(v));
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] <= breaks[i]) continue;
    auto f = [&](double r) {
      const testing::LevelOracle o = testing::level_by_definition(t, x, r);
      return std::pow(o.sigma, p.alpha) * std::pow(o.height, p.beta);
    };
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, breaks[i], breaks[i + 1], 10,
                                                                           1e-13);
  }
  return total;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TEST(ZLeaf, SingleEdge) {
  const WeightedTree t = testing::single_edge(2.5, 1.0);
  for (const double alpha : {0.0, 1.0, 7.0}) {
    EXPECT_DOUBLE_EQ(z_leaf(t, 1, {alpha, 0.0, 2.0, 0.0}), 2.5);
  }
}

TEST(ZLeaf, CherryExamples) {
  const WeightedTree t = cherry();
  EXPECT_NEAR(z_leaf(t, kCherryL1, {1.0, 0.0, 2.0, 0.0}), 2.0, 1e-14);
  EXPECT_NEAR(z_leaf(t, kCherryL1, {1.0, 1.0, 2.0, 0.0}), 3.5, 1e-14);
  EXPECT_NEAR(z_leaf_by_quadrature(t, kCherryL1, {1.0, 1.0, 2.0, 0.0}), 3.5, 1e-12);
}

TEST(ZLeaf, MatchesQuadratureOnRandomTrees) {
  RngStream rng(1, 0);
  for (int k = 0; k < 100; ++k) {
    const WeightedTree t = testing::random_tree(2 + static_cast<std::size_t>(rng.uniform() * 30), rng);
    const auto x = static_cast<VertexId>(rng.uniform() * static_cast<double>(t.size()));
    const FunctionalParams p{3.0 * rng.uniform(), 3.0 * rng.uniform(), 2.0, 0.0};
    EXPECT_NEAR(z_leaf(t, x, p), z_leaf_by_quadrature(t, x, p), 1e-8) << "tree " << k;
  }
}

TEST(ZTotal, Examples) {
  EXPECT_NEAR(z_total(cherry(), {0.0, 0.0, 2.0, 0.0}), 2.5, 1e-14);
  EXPECT_NEAR(z_total(testing::single_edge(1.0, 1.0), {5.0, 0.0, 2.0, 0.0}), 1.0, 1e-14);
  RngStream rng(2, 0);
  const WeightedTree t = testing::random_tree(400, rng);
  double mean_height = 0.0;
  for (VertexId v = 0; v < t.size(); ++v) mean_height += t.mass(v) * t.height(v);
  EXPECT_NEAR(z_total(t, {0.0, 0.0, 1.5, 0.0}), mean_height, 1e-11 * mean_height);
}

TEST(ZTotal, EqualsMassWeightedLeafSum) {
  RngStream rng(3, 0);
  for (int k = 0; k < 30; ++k) {
    const WeightedTree t = testing::random_tree(2 + static_cast<std::size_t>(rng.uniform() * 1000), rng);
    for (const double alpha : {0.0, 1.0, 2.0, 5.5}) {
      for (const double beta : {0.0, 1.0, 2.0, 0.3}) {
        const FunctionalParams p{alpha, beta, 1.7, 0.0};
        double sum = 0.0;
        for (VertexId v = 0; v < t.size(); ++v) sum += t.mass(v) * z_leaf(t, v, p);
        EXPECT_LT(rel_err(z_total(t, p), sum), 1e-10);
      }
    }
  }
}

TEST(ZFunctionals, ScalingIdentity) {
  RngStream rng(4, 0);
  for (int k = 0; k < 100; ++k) {
    const WeightedTree t = testing::random_tree(2 + static_cast<std::size_t>(rng.uniform() * 200), rng);
    const auto x = static_cast<VertexId>(rng.uniform() * static_cast<double>(t.size()));
    for (const double g : {1.5, 2.0}) {
      for (const double a : {0.5, 2.0}) {
        const WeightedTree s = rescale(t, a, g);
        for (const double alpha : {0.0, 1.0, 2.0}) {
          for (const double beta : {0.0, 1.0, 2.0}) {
            const FunctionalParams p{alpha, beta, g, 0.0};
            const double factor = std::pow(a, alpha * g / (g - 1.0) + beta + 1.0);
            const double leaf = z_leaf(t, x, p);
            if (leaf > 0.0) EXPECT_LT(rel_err(z_leaf(s, x, p), factor * leaf), 1e-10);
            // the mass measure contributes one more factor a^{g/(g-1)}
            const double total = factor * std::pow(a, g / (g - 1.0)) * z_total(t, p);
            EXPECT_LT(rel_err(z_total(s, p), total), 1e-10);
          }
        }
      }
    }
  }
}

TEST(ZFunctionals, MonotoneInExponents) {
  RngStream rng(5, 0);
  for (int k = 0; k < 20; ++k) {
    const WeightedTree t = normalize(testing::random_tree(200, rng), 2.0);
    const WeightedTree low = rescale(t, 0.9 / t.total_height(), 2.0);
    double last_alpha = z_total(t, {0.0, 0.0, 2.0, 0.0});
    double last_beta = z_total(low, {0.0, 0.0, 2.0, 0.0});
    for (const double e : {0.5, 1.0, 2.0, 8.0}) {
      const double za = z_total(t, {e, 0.0, 2.0, 0.0});
      const double zb = z_total(low, {0.0, e, 2.0, 0.0});
      EXPECT_LE(za, last_alpha * (1.0 + 1e-12));
      EXPECT_LE(zb, last_beta * (1.0 + 1e-12));
      last_alpha = za;
      last_beta = zb;
    }
  }
}

TEST(ZFunctionals, LargeExponentsStayFinite) {
  RngStream rng(6, 0);
  const WeightedTree t = normalize(testing::random_tree(500, rng), 2.0);
  for (const double beta : {40.0, 400.0}) {
    const FunctionalResult r = normalized_values(t, {0.0, beta, 2.0, 0.0}, 3);
    EXPECT_TRUE(std::isfinite(r.normalized_supercritical));
    EXPECT_GT(r.normalized_supercritical, 0.0);
    EXPECT_LE(r.normalized_supercritical, r.height * (1.0 + 1e-12));
  }
  EXPECT_GT(z_total(t, {400.0, 0.0, 2.0, 0.0}), 0.0);
}

TEST(NormalizedValues, Factors) {
  const WeightedTree t = cherry();
  const FunctionalResult sub = normalized_values(t, {4.0, 0.0, 2.0, 0.0}, kCherryL1);
  EXPECT_NEAR(sub.normalized_subcritical, 2.0 * sub.z_total, 1e-14);
  const FunctionalResult zero = normalized_values(t, {0.0, 0.0, 2.0, 0.0}, kCherryL1);
  EXPECT_DOUBLE_EQ(zero.normalized_subcritical, zero.z_total);
  const FunctionalResult sup = normalized_values(t, {0.0, 2.0, 2.0, 0.0}, kCherryL1);
  EXPECT_NEAR(sup.normalized_supercritical, 2.0 * sup.z_total / 9.0, 1e-14);
  EXPECT_DOUBLE_EQ(sup.height, 3.0);
  EXPECT_NEAR(sup.z_leaf, z_leaf(t, kCherryL1, {0.0, 2.0, 2.0, 0.0}), 1e-15);
}

TEST(NormalizedValues, DegenerateHeight) {
  const WeightedTree point = WeightedTree::build({kNoParent}, {0.0}, {1.0});
  EXPECT_THROW(normalized_values(point, {0.0, 1.0, 2.0, 0.0}, 0), DegenerateInputError);
  EXPECT_NO_THROW(normalized_values(point, {1.0, 0.0, 2.0, 0.0}, 0));
}

TEST(FunctionalParams, Validation) {
  EXPECT_THROW(validate({-1.0, 0.0, 2.0, 0.0}), DomainError);
  EXPECT_THROW(validate({0.0, -1.0, 2.0, 0.0}), DomainError);
  EXPECT_THROW(validate({0.0, 0.0, 1.0, 0.0}), DomainError);
  EXPECT_THROW(validate({0.0, 0.0, 2.0, -0.5}), DomainError);
}

}  // namespace
}  // namespace levytree
