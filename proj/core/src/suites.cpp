#include "levytree/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

#include "levytree/error.hpp"
#include "levytree/functionals.hpp"
#include "levytree/oracles.hpp"
#include "levytree/parallel.hpp"
#include "levytree/sampler.hpp"
#include "levytree/spine_zoom.hpp"
#include "levytree/stats.hpp"
#include "levytree/subordinator.hpp"

namespace levytree {

namespace {

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string gamma_tag(double gamma) { return fmt("g=%g", gamma); }

std::size_t replicates_or(const SuiteConfig& c, std::size_t fallback) {
  const std::size_t r = c.replicates.value_or(fallback);
  if (r < 2) throw ConfigError("a Monte Carlo suite needs at least 2 replicates");
  return r;
}

std::vector<double> gammas_or(const SuiteConfig& c, std::vector<double> fallback) {
  if (c.gamma) {
    require_stability_index(*c.gamma);
    return {*c.gamma};
  }
  return fallback;
}

std::string ladder(const std::vector<double>& xs, const std::vector<double>& ys, const char* name) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::string(name) + "=" + fmt("%g", xs[i]) + ": " + fmt("%.4g", ys[i]);
  }
  return s;
}

bool strictly_decreasing(const std::vector<double>& ys) {
  for (std::size_t i = 1; i < ys.size(); ++i) {
    if (!(ys[i] < ys[i - 1])) return false;
  }
  return true;
}

void add_trend(SuiteReport& r, std::string name, const std::vector<double>& xs,
               const std::vector<double>& ys, const char* xname) {
  CheckResult c;
  c.name = std::move(name);
  c.target = 0.0;
  c.estimate = ys.back();
  c.tolerance = 0.0;
  c.passed = strictly_decreasing(ys);
  c.detail = "strictly decreasing: " + ladder(xs, ys, xname);
  r.add(std::move(c));
}

void add_below(SuiteReport& r, std::string name, double estimate, double bound, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.target = 0.0;
  c.estimate = estimate;
  c.tolerance = bound;
  c.passed = estimate < bound;
  c.detail = std::move(detail);
  r.add(std::move(c));
}

OffspringLaw default_law(double gamma) { return OffspringLaw::for_gamma(gamma); }

// kappa for the default law: exactly 1 for the geometric law, calibrated otherwise.
double default_kappa(const OffspringLaw& law, double gamma, std::size_t n, const RngStream& rng,
                     unsigned threads) {
  if (law.kind() == OffspringLaw::Kind::kGeometric) return 1.0;
  return calibrate_kappa(law, gamma, n, 2000, rng, threads);
}

double mass_height_mean(const WeightedTree& t, double power) {
  double s = 0.0;
  for (VertexId v = 0; v < t.size(); ++v) s += t.mass(v) * std::pow(t.height(v), power);
  return s;
}

// ---------------------------------------------------------------- identities

SuiteReport identities(const SuiteConfig& config) {
  SuiteReport r;
  for (const double g : gammas_or(config, {1.2, 1.5, 1.8, 2.0})) {
    const std::string tag = gamma_tag(g);
    r.add_band("height_moment(p=0) " + tag, 1.0, height_moment(g, 0.0), 1e-12);
    const double mz = mean_z_alpha0(g, 0.0);
    r.add_band("height_moment(p=-1) = mean_z_alpha0(0) " + tag, mz, height_moment(g, -1.0), 1e-10 * mz);
    for (const double alpha : {0.0, 1.0, 2.0}) {
      const std::string name = "second moment closed = quadrature a=" + fmt("%g", alpha) + " " + tag;
      const double closed = second_moment_closed_form(g, alpha);
      try {
        double err = 0.0;
        const double quad = second_moment_quadrature(g, alpha, &err);
        r.add_band(name, closed, quad, 1e-8, fmt("quadrature error estimate %.2g", err));
      } catch (const NumericalError& e) {
        r.add(CheckResult{name, closed, NAN, 1e-8, false, e.what()});
      }
    }
    for (const double alpha : {0.0, 1.0, 3.0}) {
      const std::string name = "psi first moment = mean_z_alpha0 a=" + fmt("%g", alpha) + " " + tag;
      const double target = mean_z_alpha0(g, alpha);
      try {
        r.add_band(name, target, first_moment_psi_rhs(g, alpha), 1e-8);
      } catch (const NumericalError& e) {
        r.add(CheckResult{name, target, NAN, 1e-8, false, e.what()});
      }
    }
    const double c_gamma = (g - 1.0) * gamma_fn(1.0 - 1.0 / g);
    for (const double p : {-0.5, 0.5, 1.0, 1.5, 3.0}) {
      const double target = height_moment(g, 1.0 - p);
      const double est = mittag_leffler_moment(g, p) * c_gamma * std::pow(g, -p);
      r.add_band("mittag-leffler consistency p=" + fmt("%g", p) + " " + tag, target, est,
                 1e-10 * std::abs(target));
    }
  }
  return r;
}

// ---------------------------------------------------------------- invariants

WeightedTree random_recursive_tree(std::size_t n, RngStream& rng) {
  std::vector<VertexId> parents(n, kNoParent);
  std::vector<double> lens(n, 0.0);
  std::vector<double> masses(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    if (v > 0) {
      parents[v] = static_cast<VertexId>(rng.uniform() * static_cast<double>(v));
      lens[v] = 0.05 + 2.0 * rng.uniform();
    }
    masses[v] = rng.uniform() < 0.2 ? 0.0 : rng.uniform();
  }
  masses[n - 1] += 0.5;
  return WeightedTree::build(std::move(parents), std::move(lens), std::move(masses));
}

double rel_err(double x, double ref) {
  const double scale = std::max(std::abs(ref), 1e-300);
  return std::abs(x - ref) / scale;
}

SuiteReport invariants(const SuiteConfig& config) {
  SuiteReport r;
  const std::size_t trees = config.replicates.value_or(100);
  if (trees < 1) throw ConfigError("invariants suite needs at least one tree");
  const std::size_t max_n = config.n.value_or(1000);
  if (max_n < 2) throw ConfigError("invariants suite needs trees of at least 2 vertices");
  RngStream rng(config.seed, 2);

  double scaling = 0.0;
  double aggregate = 0.0;
  double linear = 0.0;
  double upper_violation = 0.0;
  const auto gammas = gammas_or(config, {1.5, 2.0});
  for (std::size_t i = 0; i < trees; ++i) {
    RngStream tr = rng.substream(i);
    const std::size_t n = 2 + static_cast<std::size_t>(tr.uniform() * static_cast<double>(max_n - 1));
    const WeightedTree t = random_recursive_tree(n, tr);
    const VertexId x = static_cast<VertexId>(tr.uniform() * static_cast<double>(n));

    for (const double g : gammas) {
      for (const double a : {0.5, 2.0}) {
        const WeightedTree s = rescale(t, a, g);
        for (const double alpha : {0.0, 1.0, 2.0}) {
          for (const double beta : {0.0, 1.0, 2.0}) {
            const FunctionalParams p{alpha, beta, g, 0.0};
            const double factor = std::pow(a, alpha * g / (g - 1.0) + beta + 1.0);
            // z_total integrates against the mass measure, which scales by a^{g/(g-1)}.
            const double total_factor = factor * std::pow(a, g / (g - 1.0));
            scaling = std::max(scaling, rel_err(z_total(s, p), total_factor * z_total(t, p)));
            const double leaf = z_leaf(t, x, p);
            if (leaf > 0.0) scaling = std::max(scaling, rel_err(z_leaf(s, x, p), factor * leaf));
          }
        }
      }
    }

    for (const double alpha : {0.0, 1.0, 2.0}) {
      for (const double beta : {0.0, 1.0, 2.0}) {
        const FunctionalParams p{alpha, beta, 2.0, 0.0};
        std::vector<double> terms(n);
        for (VertexId v = 0; v < n; ++v) terms[v] = t.mass(v) * z_leaf(t, v, p);
        aggregate = std::max(aggregate, rel_err(pairwise_sum(terms), z_total(t, p)));
      }
    }

    const VertexId star = t.argmax_vertex();
    const double top = t.total_height();
    for (int k = 0; k < 20; ++k) {
      const VertexId y = static_cast<VertexId>(tr.uniform() * static_cast<double>(n));
      const double shared = t.height(t.common_ancestor(y, star));
      for (int j = 0; j < 5; ++j) {
        const double level = tr.uniform() * shared;
        const SubtreeSummary s = subtree_at_level(t, y, level);
        linear = std::max(linear, std::abs(s.height + level - top));
        const double any = tr.uniform() * t.height(y);
        const SubtreeSummary q = subtree_at_level(t, y, any);
        upper_violation = std::max(upper_violation, q.height + any - top);
      }
      for (const VertexId v : t.ancestral_line(star)) {
        const SubtreeSummary s = subtree_at_level(t, star, t.height(v));
        linear = std::max(linear, std::abs(s.height + t.height(v) - top));
      }
    }
  }
  const std::string detail = fmt("%g random trees", static_cast<double>(trees));
  r.add_band("scaling identity (max relative error)", 0.0, scaling, 1e-10, detail);
  r.add_band("z_total = mass-weighted z_leaf (max relative error)", 0.0, aggregate, 1e-10, detail);
  r.add_band("height is linear below x* (max abs error)", 0.0, linear, 1e-12, detail);
  add_below(r, "H_rx + r <= H (max excess)", upper_violation, 1e-12, detail);
  return r;
}

// ---------------------------------------------------------------- moments

SuiteReport moments(const SuiteConfig& config) {
  SuiteReport r;
  const double g = config.gamma.value_or(2.0);
  if (g != 2.0) throw ConfigError("moments suite uses the Brownian sampler and needs gamma = 2");
  const std::size_t reps = replicates_or(config, 2000);
  const std::size_t grid = config.grid.value_or(std::size_t{1} << 14);
  const std::vector<double> alphas{1.0, 4.0, 16.0};
  RngStream rng(config.seed, 3);

  const auto rows = parallel_map<std::vector<double>>(reps, config.threads, [&](std::size_t i) {
    RngStream s = rng.substream(i);
    const WeightedTree t = sample_brownian_tree(grid, s);
    std::vector<double> out{z_total(t, {0.0, 0.0, 2.0, 0.0}), mass_height_mean(t, 2.0)};
    for (const double a : alphas) out.push_back(z_total(t, {a, 0.0, 2.0, 0.0}));
    return out;
  });
  auto column = [&](std::size_t j) {
    std::vector<double> v(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) v[i] = rows[i][j];
    return mc_estimate(v);
  };
  auto band = [&](const std::string& name, double target, const MCEstimate& e) {
    r.add_band(name, target, e.mean, 3.0 * e.standard_error + 0.02 * std::abs(target),
               fmt("stderr %.3g", e.standard_error));
  };
  band("E[Z_00] = sqrt(pi)/2", height_moment(2.0, -1.0), column(0));
  band("E[int H^2 dmu] = 1", height_moment(2.0, -2.0), column(1));
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    band("E[Z_a0] = mean_z_alpha0 a=" + fmt("%g", alphas[k]), mean_z_alpha0(2.0, alphas[k]), column(2 + k));
  }
  return r;
}

// ---------------------------------------------------------------- subordinator

SuiteReport subordinator(const SuiteConfig& config) {
  SuiteReport r;
  const double g = config.gamma.value_or(2.0);
  require_stability_index(g);
  const std::size_t reps = replicates_or(config, 1'000'000);
  const double delta = config.delta.value_or(1e-3);
  RngStream rng(config.seed, 4);
  const RatePair rates[] = {{0.0, 1.0}, {1.0, 1.0}};
  const double times[] = {1.0};

  struct Row {
    double laplace, mean0, width0, mean1, width1;
  };
  const auto rows = parallel_map<Row>(reps, config.threads, [&](std::size_t i) {
    RngStream s = rng.substream(i);
    const PathFunctionals f = path_functionals(g, rates, times, delta, config.tol, s);
    return Row{std::exp(-f.marginals[0]), f.integrals[0].estimate,
               f.integrals[0].upper - f.integrals[0].lower, f.integrals[1].estimate,
               f.integrals[1].upper - f.integrals[1].lower};
  });
  std::vector<double> laplace(reps), m0(reps), sq0(reps), w0(reps), m1(reps), w1(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    laplace[i] = rows[i].laplace;
    m0[i] = rows[i].mean0;
    sq0[i] = rows[i].mean0 * rows[i].mean0;
    w0[i] = rows[i].width0;
    m1[i] = rows[i].mean1;
    w1[i] = rows[i].width1;
  }
  const MCEstimate el = mc_estimate(laplace);
  r.add_band("E[exp(-S_1)] = exp(-gamma)", std::exp(-g), el.mean, 3.0 * el.standard_error,
             fmt("stderr %.3g", el.standard_error));
  const MCEstimate e0 = mc_estimate(m0);
  const double width0 = pairwise_sum(w0) / static_cast<double>(reps);
  r.add_band("E[int exp(-S)] = 1/gamma", 1.0 / g, e0.mean, 3.0 * e0.standard_error + width0,
             fmt("stderr %.3g", e0.standard_error) + fmt(", mean bracket width %.3g", width0));
  const MCEstimate e2 = mc_estimate(sq0);
  const double phi1 = laplace_exponent(g, 1.0);
  const double phi2 = laplace_exponent(g, 2.0);
  r.add_band("E[(int exp(-S))^2] = 2/(phi(1)phi(2))", 2.0 / (phi1 * phi2), e2.mean,
             3.0 * e2.standard_error, fmt("stderr %.3g", e2.standard_error));
  const MCEstimate e1 = mc_estimate(m1);
  const double width1 = pairwise_sum(w1) / static_cast<double>(reps);
  r.add_band("E[int exp(-S - t)] = 1/(gamma+1)", 1.0 / (g + 1.0), e1.mean,
             3.0 * e1.standard_error + width1,
             fmt("stderr %.3g", e1.standard_error) + fmt(", mean bracket width %.3g", width1));
  return r;
}

// ---------------------------------------------------------------- subcritical

SuiteReport subcritical(const SuiteConfig& config) {
  SuiteReport r;
  const double g = config.gamma.value_or(2.0);
  require_stability_index(g);
  const std::size_t reps = replicates_or(config, 2000);
  const std::size_t n = config.n.value_or(100'000);
  const std::size_t reference_size = std::max<std::size_t>(20'000, reps);
  const double delta = config.delta.value_or(1e-3);
  const std::vector<double> alphas{4.0, 16.0, 64.0};
  const RngStream rng(config.seed, 5);

  const OffspringLaw law = default_law(g);
  TreeSamplerConfig sc;
  sc.gamma = g;
  sc.n = n;
  sc.kappa = default_kappa(law, g, n, rng.substream(2), config.threads);
  const TreeSampler sampler(sc, law);

  const RngStream trees = rng.substream(0);
  const auto rows = parallel_map<std::vector<double>>(reps, config.threads, [&](std::size_t i) {
    RngStream s = trees.substream(i);
    const WeightedTree t = sampler.sample(s);
    std::vector<double> out;
    for (const double a : alphas) {
      const FunctionalParams p{a, 0.0, g, 0.0};
      out.push_back(subcritical_factor(p) * z_total(t, p));
    }
    return out;
  });
  const RngStream refs = rng.substream(1);
  const auto reference = parallel_map<double>(reference_size, config.threads, [&](std::size_t i) {
    RngStream s = refs.substream(i);
    return limit_integral(g, 0.0, 1.0, delta, config.tol, s).estimate;
  });

  std::vector<double> ks;
  std::vector<double> sample(reps);
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    for (std::size_t i = 0; i < reps; ++i) sample[i] = rows[i][k];
    ks.push_back(ks_two_sample(sample, reference).statistic);
  }
  add_trend(r, "KS(a^{1-1/g} Z_a0, int exp(-S)) decreasing", alphas, ks, "a");
  add_below(r, "KS at a=64 below 0.1", ks.back(), 0.1, fmt("kappa %.6g", sc.kappa));
  return r;
}

// ---------------------------------------------------------------- supercritical

SuiteReport supercritical(const SuiteConfig& config) {
  SuiteReport r;
  const std::size_t reps = replicates_or(config, 500);
  const std::size_t n = config.n.value_or(100'000);
  const std::vector<double> betas{10.0, 20.0, 40.0};
  for (const double g : gammas_or(config, {1.5, 2.0})) {
    // The statistic is invariant under rescaling, so kappa is irrelevant.
    TreeSamplerConfig sc;
    sc.gamma = g;
    sc.n = n;
    const TreeSampler sampler(sc);
    const RngStream rng(config.seed, 600 + static_cast<std::uint64_t>(g * 1000.0));
    const auto rows = parallel_map<std::vector<double>>(reps, config.threads, [&](std::size_t i) {
      RngStream s = rng.substream(i);
      const WeightedTree t = sampler.sample(s);
      std::vector<double> out;
      for (const double b : betas) {
        const FunctionalResult fr = normalized_values(t, {0.0, b, g, 0.0}, t.root());
        out.push_back(std::abs(fr.normalized_supercritical / t.total_height() - 1.0));
      }
      return out;
    });
    std::vector<double> means;
    for (std::size_t k = 0; k < betas.size(); ++k) {
      double s = 0.0;
      for (const auto& row : rows) s += row[k];
      means.push_back(s / static_cast<double>(reps));
    }
    const std::string tag = gamma_tag(g);
    add_trend(r, "mean |b H^-b Z_0b / H - 1| decreasing " + tag, betas, means, "b");
    add_below(r, "mean |b H^-b Z_0b / H - 1| at b=40 below 0.1 " + tag, means.back(), 0.1);
  }
  return r;
}

// ---------------------------------------------------------------- zoom

SuiteReport zoom(const SuiteConfig& config) {
  SuiteReport r;
  ZoomTestConfig zc;
  zc.gamma = config.gamma.value_or(2.0);
  require_stability_index(zc.gamma);
  zc.t = 1.0;
  zc.replicates = config.replicates.value_or(2000);
  zc.threads = config.threads;
  zc.sampler.n = config.n.value_or(100'000);
  const RngStream rng(config.seed, 7);
  const OffspringLaw law = default_law(zc.gamma);
  zc.sampler.kappa = default_kappa(law, zc.gamma, zc.sampler.n, rng.substream(2), config.threads);
  const auto rows = zoom_marginal_test(zc, rng);

  std::vector<double> eps, ks, spearman, pearson;
  for (const auto& row : rows) {
    eps.push_back(row.epsilon);
    ks.push_back(row.ks_statistic);
    spearman.push_back(std::abs(row.spearman));
    pearson.push_back(std::abs(row.pearson));
  }
  add_trend(r, "KS(S^eps_1, S_1) decreasing", eps, ks, "eps");
  CheckResult c;
  c.name = "|corr(S^eps_1, H(U))| decreasing";
  c.estimate = pearson.back();
  c.passed = strictly_decreasing(pearson);
  c.detail = "pearson: " + ladder(eps, pearson, "eps") + "; rank correlation: " + ladder(eps, spearman, "eps");
  r.add(std::move(c));
  return r;
}

// ---------------------------------------------------------------- sampler

// All valid Lukasiewicz words of length n with their conditional probabilities.
std::map<std::vector<std::uint64_t>, double> enumerate_words(const OffspringLaw& law, std::size_t n) {
  std::map<std::vector<std::uint64_t>, double> out;
  std::vector<std::uint64_t> word(n);
  double total = 0.0;
  // Depth-first over prefixes; `open` is 1 + sum (w_i - 1) so far.
  auto rec = [&](auto&& self, std::size_t i, std::int64_t open, double weight) -> void {
    if (i == n) {
      if (open == 0) {
        out[word] = weight;
        total += weight;
      }
      return;
    }
    if (open <= 0) return;
    const auto remaining = static_cast<std::int64_t>(n - i);
    for (std::int64_t k = 0; open - 1 + k <= remaining - 1; ++k) {
      word[i] = static_cast<std::uint64_t>(k);
      self(self, i + 1, open - 1 + k, weight * law.pmf(static_cast<std::uint64_t>(k)));
    }
  };
  rec(rec, 0, 1, 1.0);
  for (auto& [w, p] : out) p /= total;
  return out;
}

double empirical_tv(const ConditionedBgwSampler& sampler, std::size_t samples, RngStream& rng) {
  const auto exact = enumerate_words(sampler.law(), sampler.size());
  std::map<std::vector<std::uint64_t>, double> counts;
  for (std::size_t i = 0; i < samples; ++i) {
    counts[cycle_lemma_rotation(sampler.sample_offspring(rng))] += 1.0;
  }
  double tv = 0.0;
  for (const auto& [w, p] : exact) {
    const auto it = counts.find(w);
    tv += std::abs(p - (it == counts.end() ? 0.0 : it->second / static_cast<double>(samples)));
  }
  for (const auto& [w, c] : counts) {
    if (!exact.contains(w)) tv += c / static_cast<double>(samples);
  }
  return 0.5 * tv;
}

SuiteReport sampler_suite(const SuiteConfig& config) {
  SuiteReport r;
  const RngStream rng(config.seed, 8);

  struct Case {
    const char* name;
    OffspringLaw law;
    ConditioningMethod method;
  };
  const Case cases[] = {
      {"geometric/composition", OffspringLaw::geometric(), ConditioningMethod::kComposition},
      {"zipf1.5/rejection", OffspringLaw::zipf(1.5), ConditioningMethod::kRejection},
      {"zipf1.5/split", OffspringLaw::zipf(1.5), ConditioningMethod::kSplit},
  };
  std::uint64_t stream = 0;
  for (const Case& c : cases) {
    for (const std::size_t n : {3, 4}) {
      RngStream s = rng.substream(stream++);
      const ConditionedBgwSampler sampler(c.law, n, c.method);
      add_below(r, std::string("TV to enumeration ") + c.name + fmt(" n=%g", static_cast<double>(n)),
                empirical_tv(sampler, 100'000, s), 0.01, "100000 samples");
    }
  }

  // Cross-sampler agreement at gamma = 2.
  const std::size_t reps = replicates_or(config, 2000);
  TreeSamplerConfig bgw;
  bgw.gamma = 2.0;
  bgw.n = config.n.value_or(100'000);
  TreeSamplerConfig brownian;
  brownian.kind = TreeSamplerConfig::Kind::kBrownian;
  brownian.grid = config.grid.value_or(std::size_t{1} << 14);
  auto collect = [&](const TreeSamplerConfig& sc, std::uint64_t k) {
    const TreeSampler sampler(sc);
    const RngStream base = rng.substream(k);
    return parallel_map<std::pair<double, double>>(reps, config.threads, [&](std::size_t i) {
      RngStream s = base.substream(i);
      const WeightedTree t = sampler.sample(s);
      return std::pair{t.height(sample_mass_vertex(t, s)), mass_height_mean(t, 1.0)};
    });
  };
  const auto a = collect(bgw, 100);
  const auto b = collect(brownian, 101);
  for (int which = 0; which < 2; ++which) {
    std::vector<double> xa(reps), xb(reps);
    for (std::size_t i = 0; i < reps; ++i) {
      xa[i] = which == 0 ? a[i].first : a[i].second;
      xb[i] = which == 0 ? b[i].first : b[i].second;
    }
    const MCEstimate ea = mc_estimate(xa);
    const MCEstimate eb = mc_estimate(xb);
    const double se = std::hypot(ea.standard_error, eb.standard_error);
    r.add_band(which == 0 ? "BGW vs Brownian E[H(U)]" : "BGW vs Brownian E[Z_00]", eb.mean, ea.mean,
               3.0 * se, fmt("combined stderr %.3g", se));
  }

  // Calibration at gamma = 1.5: fit kappa on one set of trees, check on another.
  const double g = 1.5;
  const std::size_t cal_n = 10'000;
  const std::size_t cal_reps = 8000;
  const OffspringLaw zipf = OffspringLaw::zipf(g);
  const Calibration cal = calibrate(zipf, g, cal_n, cal_reps, rng.substream(200), config.threads);
  const Calibration check = calibrate(zipf, g, cal_n, cal_reps, rng.substream(201), config.threads);
  const double reproduced = cal.kappa * check.estimate;
  r.add_band("calibrated E[H(U)] within 2% g=1.5", cal.target, reproduced, 0.02 * cal.target,
             fmt("kappa %.6g", cal.kappa) + fmt(", check stderr %.3g", cal.kappa * check.standard_error));
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities",    "invariants", "moments", "subordinator",
                                              "subcritical",   "supercritical", "zoom", "sampler"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  SuiteReport r;
  if (name == "identities") {
    r = identities(config);
  } else if (name == "invariants") {
    r = invariants(config);
  } else if (name == "moments") {
    r = moments(config);
  } else if (name == "subordinator") {
    r = subordinator(config);
  } else if (name == "subcritical") {
    r = subcritical(config);
  } else if (name == "supercritical") {
    r = supercritical(config);
  } else if (name == "zoom") {
    r = zoom(config);
  } else if (name == "sampler") {
    r = sampler_suite(config);
  } else {
    throw ConfigError("unknown suite '" + name + "'");
  }
  r.suite = name;
  r.seed = config.seed;
  return r;
}

}  // namespace levytree
