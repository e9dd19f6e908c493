#include "levytree/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "levytree/error.hpp"

namespace levytree {

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kBlock = 64;
  if (values.size() <= kBlock) {
    double s = 0.0;
    for (const double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

MCEstimate mc_estimate(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw InsufficientDataError("need at least 2 values for a Monte Carlo estimate");
  const double mean = pairwise_sum(values) / static_cast<double>(n);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = (values[i] - mean) * (values[i] - mean);
  const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
  MCEstimate e;
  e.n = n;
  e.mean = mean;
  e.standard_error = std::sqrt(var / static_cast<double>(n));
  e.ci_low = mean - 1.96 * e.standard_error;
  e.ci_high = mean + 1.96 * e.standard_error;
  return e;
}

double kolmogorov_survival(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 0.2) return 1.0;
  // 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2); converges fast for x >= 0.2.
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 50 || b.size() < 50) {
    throw InsufficientDataError("two-sample KS test needs at least 50 values per sample");
  }
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == t) ++i;
    while (j < y.size() && y[j] == t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  const double ne = nx * ny / (nx + ny);
  const double root = std::sqrt(ne);
  return KsResult{d, kolmogorov_survival((root + 0.12 + 0.11 / root) * d)};
}

double correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ValidationError("correlation needs samples of equal length");
  const std::size_t n = a.size();
  if (n < 2) throw InsufficientDataError("correlation needs at least 2 pairs");
  const double ma = pairwise_sum(a) / static_cast<double>(n);
  const double mb = pairwise_sum(b) / static_cast<double>(n);
  std::vector<double> sab(n), saa(n), sbb(n);
  for (std::size_t i = 0; i < n; ++i) {
    sab[i] = (a[i] - ma) * (b[i] - mb);
    saa[i] = (a[i] - ma) * (a[i] - ma);
    sbb[i] = (b[i] - mb) * (b[i] - mb);
  }
  const double va = pairwise_sum(saa);
  const double vb = pairwise_sum(sbb);
  if (va == 0.0 || vb == 0.0) return 0.0;
  return pairwise_sum(sab) / std::sqrt(va * vb);
}

namespace {

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) { return x[p] < x[q]; });
  std::vector<double> rank(x.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i + 1;
    while (j < idx.size() && x[idx[j]] == x[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j - 1);
    for (std::size_t k = i; k < j; ++k) rank[idx[k]] = r;
    i = j;
  }
  return rank;
}

}  // namespace

double rank_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ValidationError("correlation needs samples of equal length");
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  return correlation(ra, rb);
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  const std::size_t n = std::max(p.size(), q.size());
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pi = i < p.size() ? p[i] : 0.0;
    const double qi = i < q.size() ? q[i] : 0.0;
    s += std::abs(pi - qi);
  }
  return 0.5 * s;
}

}  // namespace levytree
