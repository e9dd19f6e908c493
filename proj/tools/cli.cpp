#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <json.hpp>
#include <ostream>

#include "levytree/error.hpp"
#include "levytree/functionals.hpp"
#include "levytree/oracles.hpp"
#include "levytree/parallel.hpp"
#include "levytree/sampler.hpp"
#include "levytree/spine_zoom.hpp"
#include "levytree/stats.hpp"
#include "levytree/subordinator.hpp"
#include "levytree/suites.hpp"
#include "levytree/tree_io.hpp"

namespace levytree::cli {

namespace {

struct RunConfig {
  std::string subcommand;
  double gamma = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double c = 0.0;
  double height = 1.0;
  double p = 0.0;
  double t = 1.0;
  std::optional<double> kappa;
  double delta = 1e-3;
  double tol = 1e-6;
  std::size_t n = 10'000;
  std::size_t grid = 1 << 14;
  std::size_t replicates = 1;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string law = "default";
  std::string sampler = "bgw";
  std::string speed = "0.75";
  std::vector<double> epsilons{0.1, 0.03, 0.01};
  std::string name;  // oracle or suite
  std::string output;
  std::string format;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const auto kGamma = CLI::Validator(
    [](std::string& s) -> std::string {
      const double g = std::stod(s);
      return g > 1.0 && g <= 2.0 ? std::string() : "gamma must lie in (1, 2]";
    },
    "in (1, 2]");

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_atomically(cfg.output, text);
  }
}

// Explicit --kappa wins; otherwise 1 for the geometric law and a calibration
// run on a dedicated stream for every other law.
double resolve_kappa(const RunConfig& cfg, const OffspringLaw& law) {
  if (cfg.kappa) return *cfg.kappa;
  if (law.kind() == OffspringLaw::Kind::kGeometric) return 1.0;
  return calibrate_kappa(law, cfg.gamma, cfg.n, 2000, RngStream(cfg.seed, 1), cfg.threads);
}

TreeSampler make_sampler(const RunConfig& cfg) {
  TreeSamplerConfig sc;
  sc.gamma = cfg.gamma;
  sc.n = cfg.n;
  sc.grid = cfg.grid;
  const OffspringLaw law = OffspringLaw::by_name(cfg.law, cfg.gamma);
  if (cfg.sampler == "brownian") {
    sc.kind = TreeSamplerConfig::Kind::kBrownian;
  } else {
    sc.kappa = resolve_kappa(cfg, law);
  }
  return TreeSampler(sc, law);
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  const TreeSampler sampler = make_sampler(cfg);
  const RngStream root(cfg.seed, 0);
  const auto trees = parallel_map<std::string>(cfg.replicates, cfg.threads, [&](std::size_t i) {
    RngStream s = root.substream(i);
    return tree_to_json(sampler.sample(s));
  });
  std::string text;
  for (const auto& t : trees) text += t + "\n";
  emit(cfg, text, out);
  return kPass;
}

int cmd_zfunc(const RunConfig& cfg, std::ostream& out) {
  const TreeSampler sampler = make_sampler(cfg);
  const FunctionalParams params{cfg.alpha, cfg.beta, cfg.gamma, cfg.c};
  validate(params);
  const RngStream root(cfg.seed, 0);
  const auto rows = parallel_map<FunctionalResult>(cfg.replicates, cfg.threads, [&](std::size_t i) {
    RngStream s = root.substream(i);
    const WeightedTree t = sampler.sample(s);
    return normalized_values(t, params, sample_mass_vertex(t, s));
  });
  const std::size_t size = cfg.sampler == "brownian" ? cfg.grid : cfg.n;
  std::string text;
  if (cfg.format == "json") {
    nlohmann::json doc = {{"schema", 1}, {"gamma", cfg.gamma}, {"alpha", cfg.alpha},
                          {"beta", cfg.beta}, {"n", size}, {"seed", cfg.seed}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      arr.push_back({{"z_total", r.z_total},
                     {"z_leaf", r.z_leaf},
                     {"height", r.height},
                     {"normalized_subcritical", r.normalized_subcritical},
                     {"normalized_supercritical", r.normalized_supercritical}});
    }
    doc["replicates"] = arr;
    text = doc.dump(2) + "\n";
  } else {
    text = "gamma,alpha,beta,n,seed,replicate,z_total,z_leaf,height,normalized_subcritical,"
           "normalized_supercritical\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      text += num(cfg.gamma) + "," + num(cfg.alpha) + "," + num(cfg.beta) + "," +
              std::to_string(size) + "," + std::to_string(cfg.seed) + "," + std::to_string(i) + "," +
              num(r.z_total) + "," + num(r.z_leaf) + "," + num(r.height) + "," +
              num(r.normalized_subcritical) + "," + num(r.normalized_supercritical) + "\n";
    }
  }
  emit(cfg, text, out);
  return kPass;
}

int cmd_limit(const RunConfig& cfg, std::ostream& out) {
  const RngStream root(cfg.seed, 0);
  const auto samples = parallel_map<LimitSample>(cfg.replicates, cfg.threads, [&](std::size_t i) {
    RngStream s = root.substream(i);
    return limit_integral(cfg.gamma, cfg.c, cfg.height, cfg.delta, cfg.tol, s);
  });
  std::vector<double> est(samples.size()), lo(samples.size()), hi(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    est[i] = samples[i].estimate;
    lo[i] = samples[i].lower;
    hi[i] = samples[i].upper;
  }
  const double k = static_cast<double>(samples.size());
  const double mean = pairwise_sum(est) / k;
  const double stderr_value = samples.size() >= 2 ? mc_estimate(est).standard_error : 0.0;
  std::string text;
  if (cfg.format == "json") {
    const nlohmann::json doc = {{"schema", 1},          {"gamma", cfg.gamma}, {"c", cfg.c},
                                {"H", cfg.height},      {"delta", cfg.delta}, {"estimate", mean},
                                {"lower", pairwise_sum(lo) / k}, {"upper", pairwise_sum(hi) / k},
                                {"stderr", stderr_value}, {"replicates", samples.size()}};
    text = doc.dump(2) + "\n";
  } else {
    text = "gamma,c,H,delta,estimate,lower,upper,replicates,stderr\n" + num(cfg.gamma) + "," +
           num(cfg.c) + "," + num(cfg.height) + "," + num(cfg.delta) + "," + num(mean) + "," +
           num(pairwise_sum(lo) / k) + "," + num(pairwise_sum(hi) / k) + "," +
           std::to_string(samples.size()) + "," + num(stderr_value) + "\n";
  }
  emit(cfg, text, out);
  return kPass;
}

ZoomSpeed parse_speed(const std::string& s) {
  if (s == "linear") return ZoomSpeed::linear();
  try {
    return ZoomSpeed::power(std::stod(s));
  } catch (const std::invalid_argument&) {
    throw ConfigError("--speed must be 'linear' or an exponent in (1/2, 1)");
  }
}

int cmd_zoom(const RunConfig& cfg, std::ostream& out) {
  ZoomTestConfig zc;
  zc.gamma = cfg.gamma;
  zc.t = cfg.t;
  zc.epsilons = cfg.epsilons;
  zc.sampler.n = cfg.n;
  zc.sampler.grid = cfg.grid;
  if (cfg.sampler == "brownian") {
    zc.sampler.kind = TreeSamplerConfig::Kind::kBrownian;
  } else {
    zc.sampler.kappa = resolve_kappa(cfg, OffspringLaw::for_gamma(cfg.gamma));
  }
  zc.replicates = cfg.replicates;
  zc.speed = parse_speed(cfg.speed);
  zc.threads = cfg.threads;
  const auto rows = zoom_marginal_test(zc, RngStream(cfg.seed, 0));
  std::string text;
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      arr.push_back({{"epsilon", r.epsilon}, {"t", r.t}, {"ks_stat", r.ks_statistic},
                     {"p_value", r.p_value}, {"replicates", r.replicates},
                     {"corr_pearson", r.pearson}, {"corr_spearman", r.spearman}});
    }
    text = nlohmann::json{{"schema", 1}, {"gamma", cfg.gamma}, {"rows", arr}}.dump(2) + "\n";
  } else {
    text = "epsilon,t,ks_stat,p_value,replicates,corr_pearson,corr_spearman\n";
    for (const auto& r : rows) {
      text += num(r.epsilon) + "," + num(r.t) + "," + num(r.ks_statistic) + "," + num(r.p_value) +
              "," + std::to_string(r.replicates) + "," + num(r.pearson) + "," + num(r.spearman) + "\n";
    }
  }
  emit(cfg, text, out);
  return kPass;
}

int cmd_oracle(const RunConfig& cfg, const CLI::App& app, std::ostream& out) {
  std::map<std::string, double> params;
  if (app.count("--gamma") > 0) params["gamma"] = cfg.gamma;
  if (app.count("--p") > 0) params["p"] = cfg.p;
  if (app.count("--alpha") > 0) params["alpha"] = cfg.alpha;
  const OracleValue v = evaluate_oracle(cfg.name, params);
  const nlohmann::json doc = {{"schema", 1},          {"name", v.name},
                              {"params", v.params},   {"value", v.value},
                              {"method", to_string(v.method)}, {"abs_error", v.abs_error}};
  emit(cfg, doc.dump(2) + "\n", out);
  return kPass;
}

int cmd_verify(const RunConfig& cfg, const CLI::App& app, std::ostream& out) {
  SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.threads = cfg.threads;
  sc.tol = cfg.tol;
  if (app.count("--gamma") > 0) sc.gamma = cfg.gamma;
  if (app.count("--n") > 0) sc.n = cfg.n;
  if (app.count("--replicates") > 0) sc.replicates = cfg.replicates;
  if (app.count("--grid") > 0) sc.grid = cfg.grid;
  if (app.count("--delta") > 0) sc.delta = cfg.delta;
  const SuiteReport report = run_suite(cfg.name, sc);
  emit(cfg, cfg.format == "text" ? to_text(report) : to_json(report), out);
  return report.passed() ? kPass : kCheckFailure;
}

}  // namespace

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + tmp.string() + "' for writing");
    f << contents;
    f.flush();
    if (!f) throw Error("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename '" + tmp.string() + "' to '" + path + "': " + ec.message());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Stable Levy tree simulation and verification", "levytree"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto seed = [&](CLI::App* s) { s->add_option("--seed", cfg.seed, "Master seed"); };
  auto output = [&](CLI::App* s) { s->add_option("-o,--output", cfg.output, "Output file (default stdout)"); };
  auto tree_flags = [&](CLI::App* s) {
    s->add_option("--gamma", cfg.gamma, "Stability index")->required()->check(kGamma);
    s->add_option("--law", cfg.law, "Offspring law: default, geometric, zipf");
    s->add_option("--sampler", cfg.sampler, "Tree sampler")->check(CLI::IsMember({"bgw", "brownian"}));
    s->add_option("--n", cfg.n, "BGW vertex count")->check(CLI::PositiveNumber);
    s->add_option("--grid", cfg.grid, "Brownian grid size")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
    s->add_option("--kappa", cfg.kappa, "Edge-length calibration")->check(CLI::PositiveNumber);
    s->add_option("--replicates", cfg.replicates, "Number of trees")->check(CLI::PositiveNumber);
  };

  CLI::App* sample = app.add_subcommand("sample", "Sample trees as JSON lines");
  tree_flags(sample);
  seed(sample);
  output(sample);

  CLI::App* zfunc = app.add_subcommand("zfunc", "Additive functionals of sampled trees");
  tree_flags(zfunc);
  zfunc->add_option("--alpha", cfg.alpha, "Mass exponent")->check(CLI::NonNegativeNumber);
  zfunc->add_option("--beta", cfg.beta, "Height exponent")->check(CLI::NonNegativeNumber);
  zfunc->add_option("--c", cfg.c, "Regime constant")->check(CLI::NonNegativeNumber);
  seed(zfunc);
  output(zfunc);
  zfunc->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* limit = app.add_subcommand("limit", "Exponential functional of the stable subordinator");
  limit->add_option("--gamma", cfg.gamma, "Stability index")->required()->check(kGamma);
  limit->add_option("--c", cfg.c, "Rate constant")->check(CLI::NonNegativeNumber);
  limit->add_option("--H", cfg.height, "Height in the rate c t / H")->check(CLI::PositiveNumber);
  limit->add_option("--delta", cfg.delta, "Grid step")->check(CLI::PositiveNumber);
  limit->add_option("--tol", cfg.tol, "Horizon tolerance")->check(CLI::Range(1e-300, 1.0));
  limit->add_option("--replicates", cfg.replicates, "Number of paths")->check(CLI::PositiveNumber);
  seed(limit);
  output(limit);
  limit->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* zoom = app.add_subcommand("zoom", "Root-zoom mass process against the subordinator");
  zoom->add_option("--gamma", cfg.gamma, "Stability index")->required()->check(kGamma);
  zoom->add_option("--t", cfg.t, "Time at which S^eps is compared")->check(CLI::PositiveNumber);
  zoom->add_option("--epsilon", cfg.epsilons, "Decreasing epsilon values")->delimiter(',');
  zoom->add_option("--speed", cfg.speed, "Cutoff speed: exponent in (1/2, 1) or 'linear'");
  zoom->add_option("--sampler", cfg.sampler, "Tree sampler")->check(CLI::IsMember({"bgw", "brownian"}));
  zoom->add_option("--n", cfg.n, "BGW vertex count")->check(CLI::PositiveNumber);
  zoom->add_option("--grid", cfg.grid, "Brownian grid size")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  zoom->add_option("--kappa", cfg.kappa, "Edge-length calibration")->check(CLI::PositiveNumber);
  zoom->add_option("--replicates", cfg.replicates, "Number of trees (>= 100)")->check(CLI::PositiveNumber);
  seed(zoom);
  output(zoom);
  zoom->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* oracle = app.add_subcommand("oracle", "Closed-form and quadrature reference values");
  oracle->add_option("name", cfg.name, "height_moment, mean_z_alpha0, second_moment_rhs, "
                                       "first_moment_psi_rhs, mittag_leffler_moment, subordinator_moment")
      ->required();
  oracle->add_option("--gamma", cfg.gamma, "Stability index")->check(kGamma);
  oracle->add_option("--p", cfg.p, "Moment order");
  oracle->add_option("--alpha", cfg.alpha, "Mass exponent")->check(CLI::NonNegativeNumber);
  output(oracle);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.name, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--gamma", cfg.gamma, "Restrict to one stability index")->check(kGamma);
  verify->add_option("--n", cfg.n, "Tree size")->check(CLI::PositiveNumber);
  verify->add_option("--replicates", cfg.replicates, "Replicates")->check(CLI::PositiveNumber);
  verify->add_option("--grid", cfg.grid, "Brownian grid size")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  verify->add_option("--delta", cfg.delta, "Subordinator grid step")->check(CLI::PositiveNumber);
  seed(verify);
  output(verify);
  verify->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kPass : kUsageError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (cfg.format.empty()) cfg.format = name == "verify" ? "json" : "csv";
    if (name == "sample") return cmd_sample(cfg, out);
    if (name == "zfunc") return cmd_zfunc(cfg, out);
    if (name == "limit") return cmd_limit(cfg, out);
    if (name == "zoom") return cmd_zoom(cfg, out);
    if (name == "oracle") return cmd_oracle(cfg, *sub, out);
    return cmd_verify(cfg, *sub, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}

}  // namespace levytree::cli
