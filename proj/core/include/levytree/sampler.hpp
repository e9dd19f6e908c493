#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "levytree/offspring.hpp"
#include "levytree/rng.hpp"
#include "levytree/tree.hpp"

namespace levytree {

/// How n i.i.d. offspring counts are conditioned on summing to n - 1.
enum class ConditioningMethod {
  kAuto,
  /// Redraw until the sum matches. Works for every law; cost grows like
  /// n^{1 + 1/gamma}, so it is only practical for small n.
  kRejection,
  /// Geometric law only: the conditioned vector is uniform over weak
  /// compositions of n - 1 into n parts, drawn in O(n).
  kComposition,
  /// Binary splitting: the sum of the left half is drawn from its exact
  /// conditional law using precomputed convolution powers of the offspring
  /// law. O(n log n) per draw after an O(n log^2 n) setup.
  kSplit,
};

/// Size-conditioned Bienaymé-Galton-Watson plane trees.
///
/// Offspring counts are i.i.d. draws conditioned on summing to n - 1; the
/// cycle lemma rotates them into a valid Łukasiewicz word, which is the
/// preorder sequence of child counts. The output tree has n vertices, unit
/// edge lengths and mass 1/n on every vertex, vertex i being the i-th in
/// preorder. The object is immutable and may be shared between threads.
class ConditionedBgwSampler {
 public:
  ConditionedBgwSampler(OffspringLaw law, std::size_t n,
                        ConditioningMethod method = ConditioningMethod::kAuto,
                        std::uint64_t max_attempts = 10'000'000);
  ~ConditionedBgwSampler();
  ConditionedBgwSampler(const ConditionedBgwSampler&);
  ConditionedBgwSampler& operator=(const ConditionedBgwSampler&);

  const OffspringLaw& law() const noexcept { return law_; }
  std::size_t size() const noexcept { return n_; }
  ConditioningMethod method() const noexcept { return method_; }

  /// n offspring counts summing to n - 1, before rotation.
  std::vector<std::uint64_t> sample_offspring(RngStream& rng) const;
  WeightedTree sample(RngStream& rng) const;

 private:
  struct SplitTables;

  std::vector<std::uint64_t> sample_rejection(RngStream& rng) const;
  std::vector<std::uint64_t> sample_composition(RngStream& rng) const;
  std::vector<std::uint64_t> sample_split(RngStream& rng) const;

  OffspringLaw law_;
  std::size_t n_;
  ConditioningMethod method_;
  std::uint64_t max_attempts_;
  std::shared_ptr<const SplitTables> tables_;
};

WeightedTree sample_bgw_conditioned(const OffspringLaw& law, std::size_t n, RngStream& rng);

/// Rotates offspring counts summing to size - 1 into the unique valid
/// Łukasiewicz word among their cyclic shifts.
std::vector<std::uint64_t> cycle_lemma_rotation(std::span<const std::uint64_t> counts);

/// Builds the plane tree whose preorder child counts are `word`.
/// Throws StructuralError if `word` is not a valid Łukasiewicz word.
WeightedTree tree_from_lukasiewicz(std::span<const std::uint64_t> word, double edge_length,
                                   double vertex_mass);

/// Multiplies edge lengths by kappa * n^{-(1 - 1/gamma)}, n the vertex count.
WeightedTree scale_to_unit(const WeightedTree& discrete, double gamma, double kappa);

struct Calibration {
  double kappa = 1.0;
  double estimate = 0.0;  // mean of sum_v m(v) H(v) at kappa = 1
  double standard_error = 0.0;
  double target = 0.0;
};

/// Picks kappa so that the mean height of a mass-distributed vertex matches
/// the continuum value. The mean is linear in kappa, so one run at kappa = 1
/// gives kappa = target / estimate.
Calibration calibrate(const OffspringLaw& law, double gamma, std::size_t n, std::size_t replicates,
                      const RngStream& rng, unsigned threads = 0);
double calibrate_kappa(const OffspringLaw& law, double gamma, std::size_t n, std::size_t replicates,
                       const RngStream& rng, unsigned threads = 0);

/// Tree coded by a height sequence sampled on a grid: vertex i sits at
/// heights[i] (heights[0] must be the unique minimum 0 and becomes the root),
/// ancestry follows running minima of the linear interpolation. Grid points
/// that are the same point of the coded tree are merged; each grid point
/// contributes `grid_mass`.
WeightedTree tree_from_height_sequence(std::span<const double> heights, double grid_mass);

/// Brownian tree with m grid points: a Gaussian bridge is turned into an
/// excursion by cyclic rotation at its minimum (Vervaat), multiplied by
/// sqrt(2) and converted with `tree_from_height_sequence`, mass 1/m per
/// grid point. Throws DomainError for m < 2.
WeightedTree sample_brownian_tree(std::size_t m, RngStream& rng);

/// Uniform entry point used by the suites and the command-line tool.
struct TreeSamplerConfig {
  enum class Kind { kBgw, kBrownian };
  Kind kind = Kind::kBgw;
  double gamma = 2.0;
  std::size_t n = 10'000;    // BGW vertex count
  std::size_t grid = 1 << 14;  // Brownian grid size
  double kappa = 1.0;         // BGW edge-length calibration
};

class TreeSampler {
 public:
  TreeSampler(TreeSamplerConfig config, OffspringLaw law);
  explicit TreeSampler(TreeSamplerConfig config);

  const TreeSamplerConfig& config() const noexcept { return config_; }
  /// A tree of total mass 1 approximating the normalized stable tree.
  WeightedTree sample(RngStream& rng) const;

 private:
  TreeSamplerConfig config_;
  std::shared_ptr<const ConditionedBgwSampler> bgw_;
};

}  // namespace levytree
