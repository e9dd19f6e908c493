#include "levytree/sampler.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "levytree/error.hpp"
#include "levytree/oracles.hpp"
#include "levytree/parallel.hpp"
#include "levytree/stats.hpp"

namespace levytree {

namespace {

// FFTW planning is not thread-safe.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// Linear convolution of a and b truncated to `length` entries. Negative
// round-off is clamped to zero.
std::vector<double> convolve_truncated(const std::vector<double>& a, const std::vector<double>& b,
                                       std::size_t length) {
  std::size_t fft_size = 1;
  while (fft_size < a.size() + b.size()) fft_size <<= 1;
  const std::size_t bins = fft_size / 2 + 1;

  double* in = fftw_alloc_real(fft_size);
  fftw_complex* fa = fftw_alloc_complex(bins);
  fftw_complex* fb = fftw_alloc_complex(bins);
  fftw_plan forward_a;
  fftw_plan forward_b;
  fftw_plan backward;
  {
    std::lock_guard lock(fftw_planner_mutex());
    forward_a = fftw_plan_dft_r2c_1d(static_cast<int>(fft_size), in, fa, FFTW_ESTIMATE);
    forward_b = fftw_plan_dft_r2c_1d(static_cast<int>(fft_size), in, fb, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(static_cast<int>(fft_size), fa, in, FFTW_ESTIMATE);
  }

  std::fill(in, in + fft_size, 0.0);
  std::copy(a.begin(), a.end(), in);
  fftw_execute(forward_a);
  std::fill(in, in + fft_size, 0.0);
  std::copy(b.begin(), b.end(), in);
  fftw_execute(forward_b);
  for (std::size_t k = 0; k < bins; ++k) {
    const std::complex<double> za(fa[k][0], fa[k][1]);
    const std::complex<double> zb(fb[k][0], fb[k][1]);
    const std::complex<double> z = za * zb;
    fa[k][0] = z.real();
    fa[k][1] = z.imag();
  }
  fftw_execute(backward);

  std::vector<double> out(length);
  const double scale = 1.0 / static_cast<double>(fft_size);
  for (std::size_t k = 0; k < length; ++k) out[k] = std::max(0.0, in[k] * scale);

  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(forward_a);
    fftw_destroy_plan(forward_b);
    fftw_destroy_plan(backward);
  }
  fftw_free(in);
  fftw_free(fa);
  fftw_free(fb);
  return out;
}

}  // namespace

// q[s][k] = P(xi_1 + ... + xi_s = k) for k < n, for every block size s met
// while halving n.
struct ConditionedBgwSampler::SplitTables {
  std::map<std::size_t, std::vector<double>> q;

  SplitTables(const OffspringLaw& law, std::size_t n) {
    q[1] = law.pmf_table(n);
    build(law, n, n);
  }

  const std::vector<double>& build(const OffspringLaw& law, std::size_t s, std::size_t n) {
    if (auto it = q.find(s); it != q.end()) return it->second;
    const auto& left = build(law, s / 2, n);
    const auto& right = build(law, s - s / 2, n);
    return q.emplace(s, convolve_truncated(left, right, n)).first->second;
  }
};

ConditionedBgwSampler::ConditionedBgwSampler(OffspringLaw law, std::size_t n,
                                             ConditioningMethod method, std::uint64_t max_attempts)
    : law_(std::move(law)), n_(n), method_(method), max_attempts_(max_attempts) {
  if (n_ == 0) throw DomainError("tree size n must be at least 1");
  if (method_ == ConditioningMethod::kAuto) {
    if (law_.kind() == OffspringLaw::Kind::kGeometric) {
      method_ = ConditioningMethod::kComposition;
    } else if (n_ > 64) {
      method_ = ConditioningMethod::kSplit;
    } else {
      method_ = ConditioningMethod::kRejection;
    }
  }
  if (method_ == ConditioningMethod::kComposition && law_.kind() != OffspringLaw::Kind::kGeometric) {
    throw ConfigError("composition conditioning requires the geometric offspring law");
  }
  if (method_ == ConditioningMethod::kSplit && n_ > 1) {
    auto tables = std::make_shared<SplitTables>(law_, n_);
    if (!(tables->q.at(n_)[n_ - 1] > 0.0)) {
      throw SamplingError("offspring sum n - 1 has probability zero for n = " + std::to_string(n_));
    }
    tables_ = std::move(tables);
  }
}

ConditionedBgwSampler::~ConditionedBgwSampler() = default;
ConditionedBgwSampler::ConditionedBgwSampler(const ConditionedBgwSampler&) = default;
ConditionedBgwSampler& ConditionedBgwSampler::operator=(const ConditionedBgwSampler&) = default;

std::vector<std::uint64_t> ConditionedBgwSampler::sample_offspring(RngStream& rng) const {
  if (n_ == 1) return {0};
  switch (method_) {
    case ConditioningMethod::kComposition: return sample_composition(rng);
    case ConditioningMethod::kSplit: return sample_split(rng);
    default: return sample_rejection(rng);
  }
}

std::vector<std::uint64_t> ConditionedBgwSampler::sample_rejection(RngStream& rng) const {
  const std::uint64_t target = n_ - 1;
  std::vector<std::uint64_t> counts(n_);
  for (std::uint64_t attempt = 0; attempt < max_attempts_; ++attempt) {
    std::uint64_t sum = 0;
    std::size_t i = 0;
    for (; i < n_; ++i) {
      counts[i] = law_.sample(rng);
      sum += counts[i];
      if (sum > target) break;
    }
    if (i == n_ && sum == target) return counts;
  }
  throw SamplingError("conditioned offspring sampling gave up after " +
                      std::to_string(max_attempts_) + " attempts");
}

std::vector<std::uint64_t> ConditionedBgwSampler::sample_composition(RngStream& rng) const {
  // P(k_1..k_n) = prod 2^{-k_i-1} = 2^{-(2n-1)} on {sum = n-1}: uniform over
  // weak compositions, i.e. over placements of n-1 stars among 2n-2 slots.
  const std::size_t slots = 2 * n_ - 2;
  std::size_t stars_left = n_ - 1;
  std::vector<std::uint64_t> counts(n_, 0);
  std::size_t part = 0;
  for (std::size_t s = 0; s < slots; ++s) {
    const std::size_t remaining = slots - s;
    if (static_cast<double>(remaining) * rng.uniform() < static_cast<double>(stars_left)) {
      ++counts[part];
      --stars_left;
    } else {
      ++part;
    }
  }
  return counts;
}

std::vector<std::uint64_t> ConditionedBgwSampler::sample_split(RngStream& rng) const {
  struct Block {
    std::size_t offset;
    std::size_t size;
    std::uint64_t sum;
  };
  std::vector<std::uint64_t> counts(n_, 0);
  std::vector<Block> stack{{0, n_, n_ - 1}};
  std::vector<double> cumulative;
  while (!stack.empty()) {
    const Block b = stack.back();
    stack.pop_back();
    if (b.size == 1) {
      counts[b.offset] = b.sum;
      continue;
    }
    const std::size_t left = b.size / 2;
    const std::size_t right = b.size - left;
    const auto& ql = tables_->q.at(left);
    const auto& qr = tables_->q.at(right);
    cumulative.resize(b.sum + 1);
    double total = 0.0;
    for (std::uint64_t a = 0; a <= b.sum; ++a) {
      total += ql[a] * qr[b.sum - a];
      cumulative[a] = total;
    }
    if (!(total > 0.0)) throw SamplingError("split sampler met a block with zero weight");
    const double u = rng.uniform() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const auto a = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
        it - cumulative.begin(), static_cast<std::ptrdiff_t>(b.sum)));
    stack.push_back({b.offset + left, right, b.sum - a});
    stack.push_back({b.offset, left, a});
  }
  return counts;
}

WeightedTree ConditionedBgwSampler::sample(RngStream& rng) const {
  const auto counts = sample_offspring(rng);
  const auto word = cycle_lemma_rotation(counts);
  return tree_from_lukasiewicz(word, 1.0, 1.0 / static_cast<double>(n_));
}

WeightedTree sample_bgw_conditioned(const OffspringLaw& law, std::size_t n, RngStream& rng) {
  return ConditionedBgwSampler(law, n).sample(rng);
}

std::vector<std::uint64_t> cycle_lemma_rotation(std::span<const std::uint64_t> counts) {
  const std::size_t n = counts.size();
  if (n == 0) throw StructuralError("empty offspring sequence");
  // Partial sums S_k = sum_{i<k} (c_i - 1), k = 1..n; S_n must be -1. The word
  // starting right after the first minimum is the valid rotation.
  std::int64_t s = 0;
  std::int64_t best = 1;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    s += static_cast<std::int64_t>(counts[k - 1]) - 1;
    if (s < best) {
      best = s;
      start = k % n;
    }
  }
  if (s != -1) throw StructuralError("offspring counts must sum to size - 1");
  std::vector<std::uint64_t> word(n);
  for (std::size_t i = 0; i < n; ++i) word[i] = counts[(start + i) % n];
  return word;
}

WeightedTree tree_from_lukasiewicz(std::span<const std::uint64_t> word, double edge_length,
                                   double vertex_mass) {
  const std::size_t n = word.size();
  if (n == 0) throw StructuralError("empty Lukasiewicz word");
  std::vector<VertexId> parents(n, kNoParent);
  // (vertex, children still to attach)
  std::vector<std::pair<VertexId, std::uint64_t>> open;
  if (word[0] > 0) open.emplace_back(0, word[0]);
  for (std::size_t i = 1; i < n; ++i) {
    if (open.empty()) throw StructuralError("Lukasiewicz word closes before its last letter");
    auto& top = open.back();
    parents[i] = top.first;
    if (--top.second == 0) open.pop_back();
    if (word[i] > 0) open.emplace_back(i, word[i]);
  }
  if (!open.empty()) throw StructuralError("Lukasiewicz word leaves unattached children");
  return WeightedTree::build(std::move(parents), std::vector<double>(n, edge_length),
                             std::vector<double>(n, vertex_mass));
}

WeightedTree scale_to_unit(const WeightedTree& discrete, double gamma, double kappa) {
  require_stability_index(gamma);
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("kappa must be positive");
  const double factor =
      kappa * std::pow(static_cast<double>(discrete.size()), -(1.0 - 1.0 / gamma));
  std::vector<VertexId> parents(discrete.parents().begin(), discrete.parents().end());
  std::vector<double> lens(discrete.edge_lengths().begin(), discrete.edge_lengths().end());
  for (double& l : lens) l *= factor;
  std::vector<double> masses(discrete.masses().begin(), discrete.masses().end());
  return WeightedTree::build(std::move(parents), std::move(lens), std::move(masses));
}

namespace {

double mean_mass_height(const WeightedTree& t) {
  double s = 0.0;
  for (VertexId v = 0; v < t.size(); ++v) s += t.mass(v) * t.height(v);
  return s;
}

}  // namespace

Calibration calibrate(const OffspringLaw& law, double gamma, std::size_t n, std::size_t replicates,
                      const RngStream& rng, unsigned threads) {
  require_stability_index(gamma);
  if (replicates < 2) throw ConfigError("calibration needs at least 2 replicates");
  const ConditionedBgwSampler sampler(law, n);
  const auto values = parallel_map<double>(replicates, threads, [&](std::size_t i) {
    RngStream stream = rng.substream(i);
    return mean_mass_height(scale_to_unit(sampler.sample(stream), gamma, 1.0));
  });
  const MCEstimate est = mc_estimate(values);
  if (!(est.mean > 0.0)) throw CalibrationError("calibration estimate of E[H(U)] is not positive");
  Calibration c;
  c.target = height_moment(gamma, -1.0);
  c.estimate = est.mean;
  c.standard_error = est.standard_error;
  c.kappa = c.target / c.estimate;
  return c;
}

double calibrate_kappa(const OffspringLaw& law, double gamma, std::size_t n, std::size_t replicates,
                       const RngStream& rng, unsigned threads) {
  return calibrate(law, gamma, n, replicates, rng, threads).kappa;
}

WeightedTree tree_from_height_sequence(std::span<const double> heights, double grid_mass) {
  const std::size_t m = heights.size();
  if (m == 0) throw ValidationError("empty height sequence");
  std::vector<VertexId> parents{kNoParent};
  std::vector<double> vertex_height{heights[0]};
  std::vector<double> masses{grid_mass};
  // Ancestors of the current grid point, heights strictly increasing.
  std::vector<VertexId> stack{0};
  for (std::size_t i = 1; i < m; ++i) {
    const double h = heights[i];
    if (!std::isfinite(h)) throw ValidationError("height sequence must be finite");
    VertexId popped = kNoParent;
    while (!stack.empty() && vertex_height[stack.back()] > h) {
      popped = stack.back();
      stack.pop_back();
    }
    if (stack.empty()) throw ValidationError("heights[0] must be the minimum of the sequence");
    const VertexId top = stack.back();
    if (vertex_height[top] == h) {
      masses[top] += grid_mass;
      continue;
    }
    const VertexId v = parents.size();
    parents.push_back(top);
    vertex_height.push_back(h);
    masses.push_back(grid_mass);
    if (popped != kNoParent) parents[popped] = v;
    stack.push_back(v);
  }
  std::vector<double> lens(parents.size(), 0.0);
  for (VertexId v = 1; v < parents.size(); ++v) lens[v] = vertex_height[v] - vertex_height[parents[v]];
  return WeightedTree::build(std::move(parents), std::move(lens), std::move(masses));
}

WeightedTree sample_brownian_tree(std::size_t m, RngStream& rng) {
  if (m < 2) throw DomainError("Brownian tree needs a grid of at least 2 points");
  const double step_sd = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<double> walk(m + 1, 0.0);
  for (std::size_t k = 1; k <= m; ++k) walk[k] = walk[k - 1] + step_sd * rng.normal();
  const double end = walk[m];
  std::vector<double> bridge(m);
  for (std::size_t k = 0; k < m; ++k) {
    bridge[k] = walk[k] - static_cast<double>(k) / static_cast<double>(m) * end;
  }
  const std::size_t argmin =
      static_cast<std::size_t>(std::min_element(bridge.begin(), bridge.end()) - bridge.begin());
  std::vector<double> excursion(m);
  for (std::size_t i = 0; i < m; ++i) {
    excursion[i] = std::sqrt(2.0) * (bridge[(argmin + i) % m] - bridge[argmin]);
  }
  return tree_from_height_sequence(excursion, 1.0 / static_cast<double>(m));
}

TreeSampler::TreeSampler(TreeSamplerConfig config, OffspringLaw law) : config_(config) {
  require_stability_index(config_.gamma);
  if (!(config_.kappa > 0.0)) throw DomainError("kappa must be positive");
  if (config_.kind == TreeSamplerConfig::Kind::kBrownian) {
    if (config_.gamma != 2.0) throw DomainError("the Brownian sampler only covers gamma = 2");
    if (config_.grid < 2) throw DomainError("Brownian tree needs a grid of at least 2 points");
    return;
  }
  bgw_ = std::make_shared<const ConditionedBgwSampler>(std::move(law), config_.n);
}

TreeSampler::TreeSampler(TreeSamplerConfig config)
    : TreeSampler(config, OffspringLaw::for_gamma(config.gamma)) {}

WeightedTree TreeSampler::sample(RngStream& rng) const {
  if (config_.kind == TreeSamplerConfig::Kind::kBrownian) {
    return sample_brownian_tree(config_.grid, rng);
  }
  return scale_to_unit(bgw_->sample(rng), config_.gamma, config_.kappa);
}

}  // namespace levytree
