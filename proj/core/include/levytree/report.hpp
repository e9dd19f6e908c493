#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace levytree {

/// One acceptance check. For band checks `estimate` must lie within
/// `tolerance` of `target`; trend checks record the ladder in `detail`.
struct CheckResult {
  std::string name;
  double target = 0.0;
  double estimate = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  void add(CheckResult check) { checks.push_back(std::move(check)); }
  /// Band check |estimate - target| <= tolerance.
  void add_band(std::string name, double target, double estimate, double tolerance,
                std::string detail = {});
};

/// JSON document with "schema": 1. Non-finite numbers are written as null.
std::string to_json(const SuiteReport& report);
/// Fixed-width table, one line per check, followed by an overall line.
std::string to_text(const SuiteReport& report);

}  // namespace levytree
