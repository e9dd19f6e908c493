// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is 0 only if all pass.
//
//   acceptance [--seed N] [--threads N] [--only K] [--verbose]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "levytree/report.hpp"
#include "levytree/suites.hpp"

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* description;
};

const std::vector<Criterion> kCriteria{
    {1, "identities", "oracle identities"},
    {2, "invariants", "exact functional invariants"},
    {3, "moments", "Brownian tree moments"},
    {4, "subordinator", "subordinator Monte Carlo"},
    {5, "subcritical", "subcritical trend"},
    {6, "supercritical", "supercritical concentration"},
    {7, "zoom", "zoom marginal"},
    {8, "sampler", "sampler validation"},
};

}  // namespace

int main(int argc, char** argv) {
  levytree::SuiteConfig config;
  int only = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      config.seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg == "--threads" && i + 1 < argc) {
      config.threads = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    } else if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (arg == "--verbose") {
      verbose = true;
    } else {
      std::fprintf(stderr, "usage: %s [--seed N] [--threads N] [--only K] [--verbose]\n", argv[0]);
      return 2;
    }
  }

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    const auto start = std::chrono::steady_clock::now();
    std::string status;
    std::string text;
    try {
      const levytree::SuiteReport report = levytree::run_suite(c.suite, config);
      status = report.passed() ? "PASS" : "FAIL";
      if (verbose || !report.passed()) text = levytree::to_text(report);
    } catch (const std::exception& e) {
      status = "FAIL";
      text = std::string("error: ") + e.what() + "\n";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (status != "PASS") ++failures;
    if (!text.empty()) std::fputs(text.c_str(), stdout);
    std::printf("criterion %d (%s, %s): %s  [%.1fs]\n", c.number, c.suite, c.description, status.c_str(),
                seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
