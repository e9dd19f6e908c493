#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levytree/report.hpp"

namespace levytree {

/// Overrides for a verification suite; unset fields take the suite's defaults.
struct SuiteConfig {
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::optional<double> gamma;
  std::optional<std::size_t> n;
  std::optional<std::size_t> replicates;
  std::optional<std::size_t> grid;
  std::optional<double> delta;
  double tol = 1e-6;
};

/// identities, invariants, moments, subordinator, subcritical, supercritical,
/// zoom, sampler.
const std::vector<std::string>& suite_names();

/// Runs the named suite. Throws ConfigError for an unknown name or invalid
/// overrides (for instance fewer than 2 replicates).
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace levytree
