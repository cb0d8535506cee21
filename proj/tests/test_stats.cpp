#include <doctest.h>

#include <cmath>
#include <random>

#include "hill/stats.hpp"

using namespace hill::stats;

TEST_CASE("Eulerian numbers") {
  CHECK(eulerian(3, 0) == 1);
  CHECK(eulerian(3, 1) == 4);
  CHECK(eulerian(3, 2) == 1);
  CHECK(eulerian(4, 1) == 11);
  CHECK(eulerian(5, 2) == 66);
  CHECK(eulerian(6, 3) == 302);
  CHECK(eulerian(4, 4) == 0);
  for (int n = 1; n <= 12; ++n) {
    double total = 0, fact = 1;
    for (int k = 0; k < n; ++k) total += eulerian(n, k);
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(total == fact);
  }
}

TEST_CASE("Kolmogorov distribution tail") {
  CHECK(kolmogorov_survival(0.0) == doctest::Approx(1.0));
  CHECK(kolmogorov_survival(1.3581) == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(kolmogorov_survival(1.9495) == doctest::Approx(0.001).epsilon(1e-2));
  CHECK(kolmogorov_survival(5.0) < 1e-20);
}

TEST_CASE("KS tests accept matching and reject shifted samples") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> a(20000), b(20000), c(20000);
  for (auto& v : a) v = u(rng);
  for (auto& v : b) v = u(rng);
  for (auto& v : c) v = 0.03 + 0.97 * u(rng);
  CHECK(ks_uniform(a, 0.0, 1.0).passes(1e-3));
  CHECK_FALSE(ks_uniform(c, 0.0, 1.0).passes(1e-3));
  CHECK(ks_two_sample(a, b).passes(1e-3));
  CHECK_FALSE(ks_two_sample(a, c).passes(1e-3));
  const auto r = ks_one_sample(a, [](double x) { return std::clamp(x, 0.0, 1.0); });
  CHECK(r.n == 20000);
  CHECK(r.statistic < 0.02);
}
