#include <doctest.h>

#include <cmath>
#include <random>

#include "hill/linalg.hpp"

using namespace hill;

namespace {

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("M_3 matches the hand-computed matrix") {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  const Matrix want{{1 / s2, 1 / s6, 1 / s3}, {-1 / s2, 1 / s6, 1 / s3}, {0, -2 / s6, 1 / s3}};
  CHECK(max_abs_diff(build_M(3), want) < 1e-15);
  CHECK(build_M(1)(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("M_n is orthogonal with the documented columns") {
  for (int n = 1; n <= 16; ++n) {
    const auto m = build_M(n);
    CHECK(max_abs_diff(m.transpose() * m, Matrix::identity(n)) < 1e-12);
    const auto nu = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < nu; ++i) CHECK(m(i, nu - 1) == doctest::Approx(1 / std::sqrt(double(n))));
    for (std::size_t col = 0; col + 1 < nu; ++col) {
      const double i = static_cast<double>(col + 1);
      const double p = 1 / std::sqrt(i * (i + 1));
      for (std::size_t row = 0; row < nu; ++row) {
        const double want = row <= col ? p : (row == col + 1 ? -i * p : 0.0);
        CHECK(m(row, col) == doctest::Approx(want).epsilon(1e-14));
      }
    }
  }
  CHECK_THROWS_AS(build_M(0), InvalidDimension);
}

TEST_CASE("N_n small cases") {
  const auto n2 = build_N(2);
  REQUIRE(n2.rows() == 2);
  REQUIRE(n2.cols() == 1);
  CHECK(n2(0, 0) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(n2(1, 0) == doctest::Approx(-1 / std::sqrt(2.0)));

  const auto n3 = build_N(3);
  CHECK(n3(0, 0) == doctest::Approx(0.5 + 1 / std::sqrt(12.0)));
  CHECK(n3(2, 0) == doctest::Approx(-1 / std::sqrt(3.0)));
  CHECK(n3(2, 1) == doctest::Approx(-1 / std::sqrt(3.0)));
  CHECK_THROWS_AS(build_N(1), InvalidDimension);
}

TEST_CASE("N_n equals the product of M blocks and apply_N agrees") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 16; ++n) {
    const auto nu = static_cast<std::size_t>(n);
    const auto mn = build_M(n), mprev = build_M(n - 1);
    const auto nn = build_N(n);
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = random_vector(rng, nu);
      auto xm = row_times<double>(x, mn);
      xm.pop_back();
      const auto via_m = row_times<double>(xm, mprev.transpose());
      const auto via_n = row_times<double>(x, nn);
      CHECK(max_abs_diff(via_m, via_n) < 1e-12);

      Vector fast(nu - 1);
      apply_N(x, fast);
      CHECK(max_abs_diff(fast, via_n) < 1e-12);

      // N_n has orthonormal columns, so N_n^T undoes it on the sum-zero plane.
      Vector back(nu);
      apply_N_transpose(fast, back);
      const double mean = coordinate_sum(x) / n;
      for (std::size_t i = 0; i < nu; ++i) CHECK(back[i] == doctest::Approx(x[i] - mean).epsilon(1e-12));
    }
  }
}

TEST_CASE("op counter scales linearly for apply_N") {
  OpCounter c8, c16;
  Vector x8(8, 0.1), o8(7), x16(16, 0.1), o16(15);
  apply_N(x8, o8, &c8);
  apply_N(x16, o16, &c16);
  CHECK(c8.flops > 0);
  CHECK(static_cast<double>(c16.flops) / static_cast<double>(c8.flops) < 2.5);
}

TEST_CASE("phi examples") {
  const auto p = ShiftMapParams::for_simplex(4, 0.1);
  const Vector zero(4, 0.0);
  const auto u1 = phi(p, zero, 1);
  CHECK(u1[0] == doctest::Approx(p.a));
  for (int i = 1; i < 4; ++i) CHECK(u1[static_cast<std::size_t>(i)] == doctest::Approx(p.b));
  CHECK(max_abs_diff(phi(p, u1, -1), zero) < 1e-15);

  const ShiftMapParams one(3, 1.0, 0.0);
  const auto x = phi(one, Vector{0.9, 0.5, 0.1}, -1);
  CHECK(max_abs_diff(x, Vector{0.5, 0.1, -0.1}) < 1e-15);
}

TEST_CASE("phi powers compose, preserve distances and step the sum") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3, 5, 8}) {
    const auto p = ShiftMapParams::for_simplex(n, 0.5 / n);
    const auto x = random_vector(rng, static_cast<std::size_t>(n));
    const auto y = random_vector(rng, static_cast<std::size_t>(n));
    for (long long k : {-7LL, -1LL, 0LL, 1LL, 3LL, 13LL}) {
      Vector step = x;
      for (long long i = 0; i < std::llabs(k); ++i) step = phi(p, step, k > 0 ? 1 : -1);
      CHECK(max_abs_diff(step, phi(p, x, k)) < 1e-12);
      CHECK(coordinate_sum(phi(p, x, k)) - coordinate_sum(x) ==
            doctest::Approx(static_cast<double>(k) * p.sum_step()).epsilon(1e-12));
      CHECK(distance(phi(p, x, k), phi(p, y, k)) == doctest::Approx(distance(x, y)));
      for (long long j : {-2LL, 5LL}) CHECK(max_abs_diff(phi(p, phi(p, x, j), k), phi(p, x, j + k)) < 1e-12);
    }
    CHECK(p.sum_step() == doctest::Approx(std::sqrt(1 - (0.5 / n) * (n - 1))));
  }
}

TEST_CASE("isometries") {
  const Isometry g(Matrix{{-1, 0}, {0, -1}}, {1, 1});
  const Vector x{0.3, 0.8};
  CHECK(max_abs_diff(g.apply(x), Vector{0.7, 0.2}) < 1e-15);
  CHECK(max_abs_diff(Isometry::identity(2).apply(x), x) < 1e-15);
  CHECK(max_abs_diff(g.then(g.inverse()).apply(x), x) < 1e-15);
  CHECK(g.determinant() == doctest::Approx(1.0));
  CHECK_THROWS_AS(Isometry(Matrix{{2, 0}, {0, 1}}, {0, 0}), DomainError);
  CHECK_THROWS_AS(Isometry(Matrix{{1, 0}, {0, 1}}, {0, 0, 0}), DimensionMismatch);

  const double c = std::cos(0.7), s = std::sin(0.7);
  const Isometry rot(Matrix{{c, s}, {-s, c}}, {0.2, -1.5});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_vector(rng, 2), q = random_vector(rng, 2);
    CHECK(distance(rot.apply(p), rot.apply(q)) == doctest::Approx(distance(p, q)).epsilon(1e-12));
  }
  CHECK(rot.then(g).apply(x) == g.apply(rot.apply(x)));
}

TEST_CASE("rational matrices are exact") {
  const RationalMatrix a{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}};
  CHECK(determinant(a) == Rational(1, 10) - Rational(1, 12));
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  const auto prod = a * *inv;
  CHECK(prod(0, 0) == Rational(1));
  CHECK(prod(0, 1) == Rational(0));
  CHECK(rank(RationalMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK_FALSE(inverse(RationalMatrix{{1, 2}, {2, 4}}).has_value());

  const auto sol = solve(Matrix{{2, 1}, {1, 3}}, Vector{3, 5});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == doctest::Approx(0.8));
  CHECK((*sol)[1] == doctest::Approx(1.4));
}
