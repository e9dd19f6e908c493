#include "levytree/spine_zoom.hpp"

#include <algorithm>
#include <cmath>

#include "levytree/error.hpp"
#include "levytree/parallel.hpp"
#include "levytree/stats.hpp"
#include "levytree/subordinator.hpp"

namespace levytree {

ZoomSpeed ZoomSpeed::power(double p) {
  if (!(p > 0.5 && p < 1.0)) throw DomainError("zoom speed exponent must lie in (1/2, 1)");
  return {Kind::kPower, p};
}

double ZoomSpeed::operator()(double epsilon) const {
  return kind == Kind::kLinear ? epsilon : std::pow(epsilon, exponent);
}

ZoomMeasure zoom_measure(const WeightedTree& tree, VertexId u, double epsilon, ZoomSpeed speed,
                         double gamma) {
  require_stability_index(gamma);
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be positive");
  if (u >= tree.size()) throw StructuralError("vertex index out of range");
  const double hu = tree.height(u);
  if (!(hu > 0.0)) throw DegenerateInputError("zooming needs a vertex of positive height");

  ZoomMeasure m;
  m.epsilon = epsilon;
  m.speed = speed;
  m.vertex = u;
  m.vertex_height = hu;
  m.cutoff = speed(epsilon) * hu;
  const double mass_scale = std::pow(epsilon, -gamma / (gamma - 1.0));
  const SpineView view = spine_view(tree, u, false);
  for (const GraftedSubtree& g : view.grafts) {
    if (g.graft_height > m.cutoff) break;
    ZoomAtom atom;
    atom.height = g.graft_height / epsilon;
    atom.mass = g.sigma * mass_scale;
    atom.normalized_height =
        g.sigma > 0.0 ? g.subtree_height * std::pow(g.sigma, -1.0 + 1.0 / gamma) : 0.0;
    atom.vertex_count = g.vertex_count;
    m.atoms.push_back(atom);
  }
  return m;
}

double StepPath::at(double t) const {
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  return it == times.begin() ? 0.0 : values[static_cast<std::size_t>(it - times.begin()) - 1];
}

StepPath s_epsilon(const ZoomMeasure& measure) {
  StepPath path;
  double total = 0.0;
  for (const ZoomAtom& a : measure.atoms) {
    total += a.mass;
    path.times.push_back(a.height);
    path.values.push_back(total);
  }
  return path;
}

StepPath s_epsilon(const WeightedTree& tree, VertexId u, double epsilon, ZoomSpeed speed, double gamma) {
  return s_epsilon(zoom_measure(tree, u, epsilon, speed, gamma));
}

VertexId sample_mass_vertex(const WeightedTree& tree, RngStream& rng) {
  const double sigma = tree.total_mass();
  if (!(sigma > 0.0)) throw DegenerateInputError("cannot sample from a tree with zero mass");
  const double target = rng.uniform() * sigma;
  double acc = 0.0;
  VertexId last = tree.root();
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (tree.mass(v) <= 0.0) continue;
    acc += tree.mass(v);
    last = v;
    if (target < acc) return v;
  }
  return last;
}

std::vector<ZoomTestRow> zoom_marginal_test(const ZoomTestConfig& config, const RngStream& rng) {
  if (config.replicates < 100) throw ConfigError("zoom test needs at least 100 replicates");
  if (config.reference_size < 100) throw ConfigError("zoom test needs a reference sample of at least 100");
  if (!(config.t > 0.0)) throw ConfigError("zoom test needs t > 0");
  if (config.epsilons.empty()) throw ConfigError("zoom test needs at least one epsilon");
  for (std::size_t i = 0; i < config.epsilons.size(); ++i) {
    if (!(config.epsilons[i] > 0.0)) throw ConfigError("epsilon values must be positive");
    if (i > 0 && !(config.epsilons[i] < config.epsilons[i - 1])) {
      throw ConfigError("epsilon list must be strictly decreasing");
    }
  }
  TreeSamplerConfig sc = config.sampler;
  sc.gamma = config.gamma;
  const TreeSampler sampler(sc);
  const std::size_t k = config.epsilons.size();

  struct Replicate {
    std::vector<double> s;
    double height = 0.0;
  };
  const RngStream tree_streams = rng.substream(0);
  const auto reps = parallel_map<Replicate>(config.replicates, config.threads, [&](std::size_t i) {
    RngStream stream = tree_streams.substream(i);
    const WeightedTree tree = sampler.sample(stream);
    if (!(tree.total_height() > 0.0)) throw DegenerateInputError("sampled tree has height 0");
    VertexId u = sample_mass_vertex(tree, stream);
    while (!(tree.height(u) > 0.0)) u = sample_mass_vertex(tree, stream);
    Replicate r;
    r.height = tree.height(u);
    for (const double eps : config.epsilons) {
      r.s.push_back(s_epsilon(tree, u, eps, config.speed, config.gamma).at(config.t));
    }
    return r;
  });

  RngStream ref_stream = rng.substream(1);
  std::vector<double> reference(config.reference_size);
  for (double& x : reference) x = sample_marginal(config.gamma, config.t, ref_stream);

  std::vector<double> heights(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) heights[i] = reps[i].height;

  std::vector<ZoomTestRow> rows;
  std::vector<double> sample(reps.size());
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < reps.size(); ++i) sample[i] = reps[i].s[j];
    const KsResult ks = ks_two_sample(sample, reference);
    ZoomTestRow row;
    row.epsilon = config.epsilons[j];
    row.t = config.t;
    row.ks_statistic = ks.statistic;
    row.p_value = ks.p_value;
    row.pearson = correlation(sample, heights);
    row.spearman = rank_correlation(sample, heights);
    row.replicates = reps.size();
    row.reference_size = reference.size();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace levytree
