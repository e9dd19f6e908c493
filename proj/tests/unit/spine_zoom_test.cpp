#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "levytree/error.hpp"
#include "levytree/spine_zoom.hpp"
#include "levytree/stats.hpp"
#include "levytree/subordinator.hpp"
#include "test_trees.hpp"

namespace levytree {
namespace {

using testing::cherry;
using testing::kCherryL1;

TEST(ZoomMeasure, SingleEdgeHasNoAtoms) {
  const ZoomMeasure m = zoom_measure(testing::single_edge(1.0, 1.0), 1, 0.5, ZoomSpeed::linear(), 2.0);
  EXPECT_TRUE(m.atoms.empty());
  EXPECT_DOUBLE_EQ(s_epsilon(m).final_value(), 0.0);
}

TEST(ZoomMeasure, CherryAtEpsilonOne) {
  const ZoomMeasure m = zoom_measure(cherry(), kCherryL1, 1.0, ZoomSpeed::linear(), 2.0);
  ASSERT_EQ(m.atoms.size(), 1u);
  EXPECT_DOUBLE_EQ(m.atoms[0].height, 1.0);
  EXPECT_DOUBLE_EQ(m.atoms[0].mass, 0.5);
  EXPECT_EQ(m.atoms[0].vertex_count, 1u);
}

TEST(SEpsilon, CherryJump) {
  const StepPath p = s_epsilon(cherry(), kCherryL1, 0.5, ZoomSpeed::linear(), 2.0);
  ASSERT_EQ(p.times.size(), 1u);
  EXPECT_DOUBLE_EQ(p.times[0], 2.0);
  EXPECT_DOUBLE_EQ(p.values[0], 2.0);
  EXPECT_DOUBLE_EQ(p.at(1.999), 0.0);
  EXPECT_DOUBLE_EQ(p.at(2.0), 2.0);
  EXPECT_DOUBLE_EQ(p.at(10.0), 2.0);
}

TEST(ZoomMeasure, Errors) {
  const WeightedTree point = WeightedTree::build({kNoParent}, {0.0}, {1.0});
  EXPECT_THROW(zoom_measure(point, 0, 0.5, ZoomSpeed{}, 2.0), DegenerateInputError);
  EXPECT_THROW(zoom_measure(cherry(), kCherryL1, 0.0, ZoomSpeed{}, 2.0), DomainError);
  EXPECT_THROW(ZoomSpeed::power(0.4), DomainError);
  EXPECT_THROW(ZoomSpeed::power(1.0), DomainError);
}

TEST(ZoomMeasure, MassConservationAndAtomCount) {
  RngStream rng(1, 0);
  for (int k = 0; k < 100; ++k) {
    const WeightedTree t = testing::random_tree(2 + static_cast<std::size_t>(rng.uniform() * 300), rng);
    auto u = static_cast<VertexId>(rng.uniform() * static_cast<double>(t.size()));
    if (t.height(u) == 0.0) u = t.argmax_vertex();
    const double eps = 0.05 + 0.9 * rng.uniform();
    const double gamma = 1.2 + 0.8 * rng.uniform();
    const ZoomMeasure m = zoom_measure(t, u, eps, ZoomSpeed::linear(), gamma);

    double atoms = 0.0;
    for (const ZoomAtom& a : m.atoms) atoms += a.mass;
    atoms *= std::pow(eps, gamma / (gamma - 1.0));
    double spine_below = 0.0;
    for (const VertexId v : t.ancestral_line(u)) {
      if (t.height(v) < m.cutoff) spine_below += t.mass(v);
    }
    const double above = testing::level_by_definition(t, u, m.cutoff).sigma;
    EXPECT_NEAR(atoms, t.total_mass() - above - spine_below, 1e-10 * t.total_mass());
    EXPECT_LE(atoms, t.total_mass() * (1.0 + 1e-12));

    std::size_t branch_points = 0;
    for (const VertexId v : t.ancestral_line(u)) {
      const std::size_t on_spine = v == u ? 0 : 1;
      if (t.height(v) <= m.cutoff && t.children(v).size() > on_spine) ++branch_points;
    }
    EXPECT_EQ(m.atoms.size(), branch_points);

    const StepPath p = s_epsilon(m);
    for (std::size_t i = 1; i < p.values.size(); ++i) {
      EXPECT_GE(p.values[i], p.values[i - 1]);
      EXPECT_GE(p.times[i], p.times[i - 1]);
    }
  }
}

TEST(SampleMassVertex, FollowsMasses) {
  const WeightedTree t = WeightedTree::build({kNoParent, 0, 0}, {0.0, 1.0, 1.0}, {0.0, 0.25, 0.75});
  RngStream rng(2, 0);
  int second = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const VertexId v = sample_mass_vertex(t, rng);
    ASSERT_NE(v, 0u);
    second += v == 2 ? 1 : 0;
  }
  EXPECT_NEAR(static_cast<double>(second) / n, 0.75, 4.0 * std::sqrt(0.75 * 0.25 / n));
}

TEST(ZoomMarginalTest, ConfigErrors) {
  ZoomTestConfig c;
  c.replicates = 50;
  EXPECT_THROW(zoom_marginal_test(c, RngStream(1, 0)), ConfigError);
  c.replicates = 200;
  c.epsilons = {0.01, 0.1};
  EXPECT_THROW(zoom_marginal_test(c, RngStream(1, 0)), ConfigError);
  c.epsilons = {0.1, 0.01};
  c.t = 0.0;
  EXPECT_THROW(zoom_marginal_test(c, RngStream(1, 0)), ConfigError);
}

TEST(ZoomMarginalTest, SmallRunIsDeterministic) {
  ZoomTestConfig c;
  c.gamma = 2.0;
  c.sampler.n = 2000;
  c.replicates = 200;
  c.reference_size = 2000;
  c.epsilons = {0.3, 0.1};
  c.threads = 1;
  const auto a = zoom_marginal_test(c, RngStream(3, 0));
  c.threads = 3;
  const auto b = zoom_marginal_test(c, RngStream(3, 0));
  ASSERT_EQ(a.size(), 2u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].ks_statistic, b[i].ks_statistic);
    EXPECT_EQ(a[i].spearman, b[i].spearman);
    EXPECT_EQ(a[i].replicates, 200u);
    EXPECT_GE(a[i].ks_statistic, 0.0);
    EXPECT_LE(a[i].ks_statistic, 1.0);
  }
}

}  // namespace
}  // namespace levytree
