#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "levytree/error.hpp"
#include "levytree/oracles.hpp"
#include "levytree/sampler.hpp"
#include "levytree/stats.hpp"

namespace levytree {
namespace {

using Word = std::vector<std::uint64_t>;

// Exact law of the size-n conditioned tree: every valid Lukasiewicz word of
// length n, weighted by the product of offspring probabilities.
std::map<Word, double> exact_word_law(const OffspringLaw& law, std::size_t n) {
  std::map<Word, double> out;
  Word w;
  double total = 0.0;
  std::function<void(long, double)> rec = [&](long open, double weight) {
    if (w.size() == n) {
      if (open == 0) {
        out[w] = weight;
        total += weight;
      }
      return;
    }
    for (std::uint64_t k = 0; k + w.size() < n; ++k) {
      const long next = open - 1 + static_cast<long>(k);
      if (next == 0 && w.size() + 1 < n) continue;
      if (next < 0) continue;
      w.push_back(k);
      rec(next, weight * law.pmf(k));
      w.pop_back();
    }
  };
  rec(1, 1.0);
  for (auto& [word, p] : out) p /= total;
  return out;
}

double tv_to_exact(const ConditionedBgwSampler& s, std::size_t samples, std::uint64_t seed) {
  const auto exact = exact_word_law(s.law(), s.size());
  std::map<Word, double> freq;
  RngStream rng(seed, 0);
  for (std::size_t i = 0; i < samples; ++i) {
    const Word w = cycle_lemma_rotation(s.sample_offspring(rng));
    freq[w] += 1.0 / static_cast<double>(samples);
  }
  double tv = 0.0;
  for (const auto& [w, p] : exact) tv += std::abs(p - (freq.count(w) ? freq[w] : 0.0));
  for (const auto& [w, p] : freq) {
    if (!exact.count(w)) tv += p;
  }
  return tv / 2.0;
}

TEST(OffspringLaw, IsCritical) {
  for (const OffspringLaw& law : {OffspringLaw::geometric(), OffspringLaw::zipf(1.5),
                                  OffspringLaw::zipf(1.2), OffspringLaw::zipf(1.9)}) {
    const auto p = law.pmf_table(2'000'000);
    double mass = 0.0, mean = 0.0;
    for (std::size_t k = p.size(); k-- > 0;) {
      mass += p[k];
      mean += static_cast<double>(k) * p[k];
    }
    if (law.kind() == OffspringLaw::Kind::kZipf) {
      // integral approximation of the mean carried by k >= K
      const double g = law.gamma();
      const double k = static_cast<double>(p.size());
      mean += law.pmf(1) * std::pow(k - 0.5, 1.0 - g) / (g - 1.0);
    }
    EXPECT_NEAR(mass, 1.0, 1e-4) << law.name();
    EXPECT_NEAR(mean, 1.0, 1e-6) << law.name();
  }
}

TEST(OffspringLaw, SamplerMatchesPmf) {
  for (const OffspringLaw& law : {OffspringLaw::geometric(), OffspringLaw::zipf(1.5)}) {
    RngStream rng(1, 0);
    const int n = 200000;
    std::vector<double> counts(6, 0.0);
    for (int i = 0; i < n; ++i) {
      const auto k = law.sample(rng);
      if (k < counts.size()) counts[k] += 1.0;
    }
    for (std::size_t k = 0; k < counts.size(); ++k) {
      const double p = law.pmf(k);
      EXPECT_NEAR(counts[k] / n, p, 5.0 * std::sqrt(p * (1 - p) / n) + 1e-6) << law.name() << " k=" << k;
    }
  }
}

TEST(OffspringLaw, TableValidation) {
  EXPECT_NO_THROW(OffspringLaw::table(2.0, {0.25, 0.5, 0.25}));
  EXPECT_THROW(OffspringLaw::table(2.0, {0.5, 0.5}), ValidationError);
  EXPECT_THROW(OffspringLaw::table(2.0, {0.3, 0.3, 0.3}), ValidationError);
}

TEST(CycleLemma, ProducesTheUniqueValidRotation) {
  RngStream rng(2, 0);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 40);
    // random counts with sum n - 1
    Word c(n, 0);
    for (std::size_t j = 0; j + 1 < n; ++j) c[static_cast<std::size_t>(rng.uniform() * n)]++;
    const Word w = cycle_lemma_rotation(c);
    long open = 1;
    for (std::size_t i = 0; i < n; ++i) {
      open += static_cast<long>(w[i]) - 1;
      if (i + 1 < n) EXPECT_GT(open, 0);
    }
    EXPECT_EQ(open, 0);
    const WeightedTree t = tree_from_lukasiewicz(w, 1.0, 1.0);
    EXPECT_EQ(t.size(), n);
    for (VertexId v = 0; v < n; ++v) EXPECT_EQ(t.children(v).size(), w[v]);
  }
}

TEST(Lukasiewicz, RejectsInvalidWords) {
  const Word bad{0, 1};
  EXPECT_THROW(tree_from_lukasiewicz(bad, 1.0, 1.0), StructuralError);
}

TEST(ConditionedBgw, TwoVerticesAlwaysGiveTheEdge) {
  const ConditionedBgwSampler s(OffspringLaw::geometric(), 2);
  RngStream rng(3, 0);
  for (int i = 0; i < 100; ++i) {
    const WeightedTree t = s.sample(rng);
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t.parent(1), 0u);
  }
}

TEST(ConditionedBgw, ThreeVerticesGeometricIsFair) {
  const ConditionedBgwSampler s(OffspringLaw::geometric(), 3);
  RngStream rng(4, 0);
  int paths = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) paths += s.sample(rng).children(0).size() == 1 ? 1 : 0;
  EXPECT_NEAR(static_cast<double>(paths) / n, 0.5, 4.0 * 0.5 / std::sqrt(n));
}

TEST(ConditionedBgw, MatchesExactEnumeration) {
  struct Case {
    OffspringLaw law;
    ConditioningMethod method;
  };
  const std::vector<Case> cases{
      {OffspringLaw::geometric(), ConditioningMethod::kComposition},
      {OffspringLaw::geometric(), ConditioningMethod::kRejection},
      {OffspringLaw::geometric(), ConditioningMethod::kSplit},
      {OffspringLaw::zipf(1.5), ConditioningMethod::kRejection},
      {OffspringLaw::zipf(1.5), ConditioningMethod::kSplit},
      {OffspringLaw::zipf(1.2), ConditioningMethod::kSplit},
  };
  std::uint64_t seed = 10;
  for (const Case& c : cases) {
    for (const std::size_t n : {3u, 4u, 5u}) {
      const ConditionedBgwSampler s(c.law, n, c.method);
      EXPECT_LT(tv_to_exact(s, 100000, seed++), 0.01) << c.law.name() << " n=" << n;
    }
  }
}

TEST(ConditionedBgw, SplitMatchesRejectionAtModerateSize) {
  // Root degree distribution of the conditioned tree, two independent methods.
  const OffspringLaw law = OffspringLaw::zipf(1.5);
  const std::size_t n = 40;
  const ConditionedBgwSampler split(law, n, ConditioningMethod::kSplit);
  const ConditionedBgwSampler reject(law, n, ConditioningMethod::kRejection);
  RngStream a(20, 0), b(21, 0);
  std::vector<double> da, db;
  for (int i = 0; i < 20000; ++i) {
    const WeightedTree ta = split.sample(a);
    const WeightedTree tb = reject.sample(b);
    da.push_back(ta.total_height() + 0.001 * static_cast<double>(ta.children(0).size()));
    db.push_back(tb.total_height() + 0.001 * static_cast<double>(tb.children(0).size()));
  }
  EXPECT_GT(ks_two_sample(da, db).p_value, 0.001);
}

TEST(ConditionedBgw, OutputIsAlwaysAValidTree) {
  for (const auto method : {ConditioningMethod::kAuto, ConditioningMethod::kSplit}) {
    const ConditionedBgwSampler s(OffspringLaw::zipf(1.3), 5000, method);
    RngStream rng(22, 0);
    for (int i = 0; i < 20; ++i) {
      const auto counts = s.sample_offspring(rng);
      EXPECT_EQ(counts.size(), 5000u);
      EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}), 4999u);
      const WeightedTree t = tree_from_lukasiewicz(cycle_lemma_rotation(counts), 1.0, 1.0 / 5000);
      EXPECT_EQ(t.size(), 5000u);
      EXPECT_NEAR(t.total_mass(), 1.0, 1e-9);
    }
  }
}

TEST(ConditionedBgw, SameStreamSameTree) {
  const ConditionedBgwSampler s(OffspringLaw::zipf(1.5), 1000);
  RngStream a(23, 4), b(23, 4);
  const WeightedTree ta = s.sample(a);
  const WeightedTree tb = s.sample(b);
  ASSERT_EQ(ta.size(), tb.size());
  for (VertexId v = 0; v < ta.size(); ++v) EXPECT_EQ(ta.parent(v), tb.parent(v));
}

TEST(ConditionedBgw, CompositionNeedsGeometric) {
  EXPECT_THROW(ConditionedBgwSampler(OffspringLaw::zipf(1.5), 10, ConditioningMethod::kComposition),
               ConfigError);
}

TEST(ScaleToUnit, EdgeLengths) {
  RngStream rng(24, 0);
  const WeightedTree single = ConditionedBgwSampler(OffspringLaw::geometric(), 1).sample(rng);
  EXPECT_EQ(single.size(), 1u);
  EXPECT_DOUBLE_EQ(single.total_height(), 0.0);
  const WeightedTree t = scale_to_unit(ConditionedBgwSampler(OffspringLaw::geometric(), 10000).sample(rng), 2.0, 1.0);
  EXPECT_NEAR(t.edge_length(1), 0.01, 1e-15);
  const WeightedTree chain = tree_from_lukasiewicz(Word{1, 1, 0}, 1.0, 1.0);
  const double n = 3.0;
  EXPECT_NEAR(scale_to_unit(chain, 1.5, 2.0).edge_length(1), 2.0 * std::pow(n, -1.0 / 3.0), 1e-15);
}

TEST(Calibration, GeometricGivesKappaNearOne) {
  const Calibration c = calibrate(OffspringLaw::geometric(), 2.0, 4000, 1000, RngStream(25, 0));
  EXPECT_NEAR(c.target, std::sqrt(M_PI) / 2.0, 1e-12);
  EXPECT_NEAR(c.target, height_moment(2.0, -1.0), 1e-15);
  // finite-n bias of the mean height is O(n^{-1/2}), about 1% here
  EXPECT_NEAR(c.kappa, 1.0, 4.0 * c.standard_error / c.estimate + 0.02);
}

TEST(Calibration, MeanHeightIsLinearInKappa) {
  const ConditionedBgwSampler s(OffspringLaw::zipf(1.5), 300);
  RngStream a(26, 0), b(26, 0);
  const WeightedTree t1 = scale_to_unit(s.sample(a), 1.5, 1.0);
  const WeightedTree t2 = scale_to_unit(s.sample(b), 1.5, 2.0);
  double m1 = 0.0, m2 = 0.0;
  for (VertexId v = 0; v < t1.size(); ++v) {
    m1 += t1.mass(v) * t1.height(v);
    m2 += t2.mass(v) * t2.height(v);
  }
  EXPECT_NEAR(m2, 2.0 * m1, 1e-12 * m2);
}

TEST(HeightSequence, MergesEqualHeights) {
  // The point at height 0.5 has two children at height 1; the last grid point
  // is that same point again.
  const std::vector<double> h{0.0, 1.0, 0.5, 1.0, 0.5};
  const WeightedTree t = tree_from_height_sequence(h, 0.2);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_NEAR(t.total_mass(), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(t.total_height(), 1.0);
  const VertexId branch = t.parent(1);
  EXPECT_DOUBLE_EQ(t.height(branch), 0.5);
  EXPECT_EQ(t.children(branch).size(), 2u);
  EXPECT_NEAR(t.mass(branch), 0.4, 1e-15);
  EXPECT_THROW(tree_from_height_sequence(std::vector<double>{0.5, 0.0}, 0.5), ValidationError);
}

TEST(BrownianTree, SmallAndInvalidGrids) {
  RngStream rng(27, 0);
  const WeightedTree t = sample_brownian_tree(2, rng);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_THROW(sample_brownian_tree(1, rng), DomainError);
  for (int i = 0; i < 20; ++i) {
    EXPECT_NEAR(sample_brownian_tree(1000, rng).total_mass(), 1.0, 1e-12);
  }
}

TEST(BrownianTree, MeanMassWeightedHeight) {
  const std::size_t reps = 2000;
  const RngStream root(28, 0);
  std::vector<double> v(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    RngStream s = root.substream(i);
    const WeightedTree t = sample_brownian_tree(1 << 12, s);
    double m = 0.0;
    for (VertexId u = 0; u < t.size(); ++u) m += t.mass(u) * t.height(u);
    v[i] = m;
  }
  const MCEstimate e = mc_estimate(v);
  // grid bias is below 1% at this size
  EXPECT_NEAR(e.mean, std::sqrt(M_PI) / 2.0, 3.0 * e.standard_error + 0.01);
}

TEST(TreeSampler, BrownianNeedsGammaTwo) {
  TreeSamplerConfig c;
  c.kind = TreeSamplerConfig::Kind::kBrownian;
  c.gamma = 1.5;
  EXPECT_THROW(TreeSampler{c}, DomainError);
}

}  // namespace
}  // namespace levytree
