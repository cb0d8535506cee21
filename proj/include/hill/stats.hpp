#pragma once

// Kolmogorov-Smirnov tests and Eulerian numbers for the Monte Carlo checks.

#include <cstddef>
#include <functional>
#include <vector>

namespace hill::stats {

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;

  bool passes(double alpha) const { return p_value > alpha; }
};

// P(K > t) for the Kolmogorov distribution.
double kolmogorov_survival(double t);

// One-sample test against a continuous CDF. The data vector is sorted in place.
KsResult ks_one_sample(std::vector<double> data, const std::function<double(double)>& cdf);

// Against Uniform[lo, hi].
KsResult ks_uniform(std::vector<double> data, double lo, double hi);

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// A(n, k): permutations of n with k descents. Exact up to n = 20.
double eulerian(int n, int k);

}  // namespace hill::stats
