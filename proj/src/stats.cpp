#include "hill/stats.hpp"

#include <algorithm>
#include <cmath>

#include "hill/errors.hpp"

namespace hill::stats {

double kolmogorov_survival(double t) {
  if (t <= 0.0) return 1.0;
  if (t < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * t * t);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

namespace {

// Effective-size correction of Stephens (1970).
double p_value(double d, double en) {
  const double root = std::sqrt(en);
  return kolmogorov_survival((root + 0.12 + 0.11 / root) * d);
}

}  // namespace

KsResult ks_one_sample(std::vector<double> data, const std::function<double(double)>& cdf) {
  if (data.empty()) throw DomainError("ks_one_sample: empty sample");
  std::sort(data.begin(), data.end());
  const double n = static_cast<double>(data.size());
  double d = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double f = cdf(data[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return {d, p_value(d, n), data.size()};
}

KsResult ks_uniform(std::vector<double> data, double lo, double hi) {
  if (!(hi > lo)) throw DomainError("ks_uniform: empty interval");
  return ks_one_sample(std::move(data),
                       [=](double x) { return std::clamp((x - lo) / (hi - lo), 0.0, 1.0); });
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return {d, p_value(d, na * nb / (na + nb)), a.size() + b.size()};
}

double eulerian(int n, int k) {
  if (n < 0 || n > 20) throw InvalidDimension("eulerian: need 0 <= n <= 20");
  if (k < 0 || (n > 0 && k >= n) || (n == 0 && k != 0)) return 0.0;
  std::vector<double> row{1.0};
  for (int m = 1; m <= n; ++m) {
    std::vector<double> next(static_cast<std::size_t>(m), 0.0);
    for (int j = 0; j < m; ++j) {
      double v = 0.0;
      if (j < m - 1) v += (j + 1) * row[static_cast<std::size_t>(j)];
      if (j >= 1) v += (m - j) * row[static_cast<std::size_t>(j - 1)];
      next[static_cast<std::size_t>(j)] = v;
    }
    if (m == 1) next[0] = 1.0;
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace hill::stats
