#include <doctest.h>

#include <cmath>
#include <vector>

#include "hill/simplex.hpp"
#include "hill/stats.hpp"

using namespace hill;

namespace {

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<double> w_grid(int n) {
  const double nd = n;
  return {-0.5, 0.0, 1 / (2 * nd), 1 / nd, 0.99 / (nd - 1)};
}

}  // namespace

TEST_CASE("generators have the Hill Gram matrix") {
  for (int n = 2; n <= 10; ++n)
    for (double w : w_grid(n)) {
      const auto s = make_simplex(n, w);
      const auto gram = s.generators * s.generators.transpose();
      Matrix want(static_cast<std::size_t>(n), static_cast<std::size_t>(n), -w);
      for (std::size_t i = 0; i < want.rows(); ++i) want(i, i) = 1;
      CHECK(max_abs_diff(gram, want) < 1e-12);
      CHECK(s.apex_level() == doctest::Approx(std::sqrt(1 - w * (n - 1))));
    }
}

TEST_CASE("closed-form volume equals |det|/n!") {
  for (int n = 2; n <= 10; ++n)
    for (double w : w_grid(n)) {
      const auto s = make_simplex(n, w);
      const double det = std::abs(determinant(s.generators)) / factorial(n);
      CHECK(std::abs(simplex_volume(n, w) - det) <= 1e-12 * det);
    }
}

TEST_CASE("vertex distances follow m(1+w) - w m^2") {
  const auto s = make_simplex(5, 0.15);
  const auto v = s.all_vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      CHECK(squared_distance<double>(v[i], v[j]) ==
            doctest::Approx(hill_squared_distance<double>(i, j, 0.15)).epsilon(1e-12));
  CHECK(hill_squared_distance<Rational>(0, 3, Rational(1, 3)) == Rational(1));
}

TEST_CASE("parameter range") {
  CHECK_THROWS_AS(make_simplex(3, 0.5), ParameterRange);
  CHECK_THROWS_AS(make_simplex(3, -1.0), ParameterRange);
  CHECK_NOTHROW(make_simplex(3, 0.49));
  CHECK_NOTHROW(make_simplex(1, 5.0));
  CHECK_THROWS_AS(make_simplex(0, 0.0), InvalidDimension);
}

TEST_CASE("membership on vertices and just outside") {
  for (int n : {2, 3, 6})
    for (double w : w_grid(n)) {
      const auto s = make_simplex(n, w);
      const auto hs = simplex_halfspaces(s);
      for (const auto& v : s.all_vertices()) {
        CHECK(contains(s, v, 1e-9));
        // Step outward along every facet normal the vertex lies on.
        for (const auto& h : hs.halfspaces()) {
          if (std::abs(h.eval(v)) > 1e-9) continue;
          const double len = std::sqrt(dot<double>(h.normal, h.normal));
          auto out = v;
          for (std::size_t i = 0; i < out.size(); ++i) out[i] += 1e-3 * h.normal[i] / len;
          CHECK_FALSE(contains(s, out, 1e-9));
        }
      }
    }
}

TEST_CASE("orthoscheme is the staircase") {
  const auto s = make_simplex(4, 0.0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(s.vertices(i, j) == doctest::Approx(j <= i ? 1.0 : 0.0));
}

TEST_CASE("samples are inside and have the right sum distribution") {
  const int n = 4;
  const std::size_t m = 100000;
  const auto s = make_simplex(n, 0.0);
  const auto pts = sample(s, m, 42);
  REQUIRE(pts.size() == m);
  std::vector<double> slab(n, 0.0);
  double sum = 0, sum2 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    CHECK(contains(s, pts.row(i), 1e-9));
    const double t = coordinate_sum(pts.row(i));
    sum += t;
    sum2 += t * t;
    slab[static_cast<std::size_t>(std::min(std::floor(t), n - 1.0))] += 1;
  }
  // The sum of n sorted uniforms is a sum of n uniforms: mean n/2, variance n/12.
  const double mean = sum / m;
  CHECK(std::abs(mean - n / 2.0) < 3 * std::sqrt(n / 12.0 / m));
  CHECK(sum2 / m - mean * mean == doctest::Approx(n / 12.0).epsilon(0.03));
  for (int k = 0; k < n; ++k) {
    const double p = stats::eulerian(n, k) / factorial(n);
    CHECK(std::abs(slab[static_cast<std::size_t>(k)] - m * p) < 3 * std::sqrt(m * p * (1 - p)));
  }

  const auto again = sample(s, m, 42);
  CHECK(again.data() == pts.data());
}

TEST_CASE("P_n versions are congruent") {
  for (int n = 1; n <= 6; ++n) {
    const auto v = pn_variants(n);
    const auto d0 = squared_distance_matrix(v[0].with_origin());
    for (int k = 1; k < 3; ++k) {
      const auto dk = squared_distance_matrix(v[static_cast<std::size_t>(k)].with_origin());
      CHECK(max_abs_diff(d0, dk) < 1e-12);
    }
    if (n == 1) CHECK(std::sqrt(d0(0, 1)) == doctest::Approx(1.0));
  }
  const auto p2 = pn_variants(2)[0].with_origin();
  CHECK(squared_distance<double>(p2[0], p2[1]) == doctest::Approx(squared_distance<double>(p2[1], p2[2])));
  CHECK(squared_distance<double>(p2[0], p2[2]) == doctest::Approx(squared_distance<double>(p2[1], p2[2])));
}
