#include "levytree/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace levytree {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void SuiteReport::add_band(std::string name, double target, double estimate, double tolerance,
                           std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.target = target;
  c.estimate = estimate;
  c.tolerance = tolerance;
  c.passed = std::abs(estimate - target) <= tolerance;
  c.detail = std::move(detail);
  checks.push_back(std::move(c));
}

namespace {

nlohmann::json number(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(); }

}  // namespace

std::string to_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"target", number(c.target)},
                      {"estimate", number(c.estimate)},
                      {"tolerance", number(c.tolerance)},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  }
  const nlohmann::json doc = {{"schema", 1},
                              {"suite", report.suite},
                              {"seed", report.seed},
                              {"passed", report.passed()},
                              {"checks", checks}};
  return doc.dump(2) + "\n";
}

std::string to_text(const SuiteReport& report) {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-52s %14s %14s %12s  %s\n", "check", "target", "estimate",
                "tolerance", "result");
  out += line;
  for (const CheckResult& c : report.checks) {
    std::snprintf(line, sizeof line, "%-52s %14.8g %14.8g %12.4g  %s", c.name.c_str(), c.target,
                  c.estimate, c.tolerance, c.passed ? "PASS" : "FAIL");
    out += line;
    if (!c.detail.empty()) out += "  [" + c.detail + "]";
    out += "\n";
  }
  out += "suite " + report.suite + ": " + (report.passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace levytree
