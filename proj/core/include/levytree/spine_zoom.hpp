#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "levytree/rng.hpp"
#include "levytree/sampler.hpp"
#include "levytree/tree.hpp"

namespace levytree {

/// Cutoff speed f(epsilon): epsilon^p with p in (1/2, 1), or epsilon itself.
struct ZoomSpeed {
  enum class Kind { kPower, kLinear };
  Kind kind = Kind::kPower;
  double exponent = 0.75;

  static ZoomSpeed linear() { return {Kind::kLinear, 1.0}; }
  /// Throws DomainError unless 1/2 < p < 1.
  static ZoomSpeed power(double p);

  double operator()(double epsilon) const;
};

struct ZoomAtom {
  double height = 0.0;             // h_i / epsilon
  double mass = 0.0;               // sigma_i epsilon^{-gamma/(gamma-1)}
  double normalized_height = 0.0;  // height of the grafted subtree after normalization
  std::size_t vertex_count = 0;
};

/// Grafted subtrees along the ancestral line of U, heights up to f(epsilon) H(U),
/// rescaled around the root.
struct ZoomMeasure {
  double epsilon = 0.0;
  ZoomSpeed speed;
  VertexId vertex = 0;
  double vertex_height = 0.0;
  double cutoff = 0.0;  // f(epsilon) H(U), unscaled
  std::vector<ZoomAtom> atoms;  // increasing height
};

/// Throws DegenerateInputError if H(U) = 0 and DomainError for epsilon <= 0.
ZoomMeasure zoom_measure(const WeightedTree& tree, VertexId u, double epsilon, ZoomSpeed speed,
                         double gamma);

/// Right-continuous nondecreasing step function starting at 0.
struct StepPath {
  std::vector<double> times;   // jump times, increasing
  std::vector<double> values;  // value from times[i] on

  double at(double t) const;
  double final_value() const { return values.empty() ? 0.0 : values.back(); }
};

/// S^epsilon_t: cumulative rescaled mass of the grafts at rescaled height <= t,
/// restricted to grafts below the cutoff.
StepPath s_epsilon(const WeightedTree& tree, VertexId u, double epsilon, ZoomSpeed speed, double gamma);
StepPath s_epsilon(const ZoomMeasure& measure);

/// Vertex drawn from the mass measure.
VertexId sample_mass_vertex(const WeightedTree& tree, RngStream& rng);

struct ZoomTestConfig {
  double gamma = 2.0;
  double t = 1.0;
  std::vector<double> epsilons{0.1, 0.03, 0.01};
  TreeSamplerConfig sampler;  // gamma is overwritten by `gamma`
  std::size_t replicates = 2000;
  std::size_t reference_size = 20000;
  ZoomSpeed speed;
  unsigned threads = 0;
};

struct ZoomTestRow {
  double epsilon = 0.0;
  double t = 0.0;
  double ks_statistic = 0.0;
  double p_value = 0.0;
  /// Pearson and Spearman correlation of S^epsilon_t with H(U).
  double pearson = 0.0;
  double spearman = 0.0;
  std::size_t replicates = 0;
  std::size_t reference_size = 0;
};

/// One tree and one mass-distributed vertex per replicate, shared by every
/// epsilon; the reference sample of S_t is drawn exactly from the
/// subordinator marginal. Throws ConfigError for fewer than 100 replicates, a
/// non-decreasing epsilon list or t <= 0.
std::vector<ZoomTestRow> zoom_marginal_test(const ZoomTestConfig& config, const RngStream& rng);

}  // namespace levytree
