#include <doctest.h>

#include <cmath>
#include <random>

#include "hill/polytope.hpp"
#include "hill/simplex.hpp"

using namespace hill;

namespace {

HPolytope<double> cube(std::size_t d) {
  HPolytope<double> p(d);
  for (std::size_t i = 0; i < d; ++i) {
    Vector up(d, 0.0), down(d, 0.0);
    up[i] = 1;
    down[i] = -1;
    p.add({up, 1.0});
    p.add({down, 0.0});
  }
  return p;
}

// {x1 <= 1, x2 <= x1, x3 <= x2, x3 >= 0}
template <class T>
HPolytope<T> orthoscheme3() {
  HPolytope<T> p(3);
  p.add({{T(1), T(0), T(0)}, T(1)});
  p.add({{T(-1), T(1), T(0)}, T(0)});
  p.add({{T(0), T(-1), T(1)}, T(0)});
  p.add({{T(0), T(0), T(-1)}, T(0)});
  return p;
}

std::vector<Vector> rhombic_dodecahedron_vertices() {
  std::vector<Vector> v;
  for (int i = 0; i < 3; ++i)
    for (double s : {-1.0, 1.0}) {
      Vector p(3, 0.0);
      p[static_cast<std::size_t>(i)] = s;
      v.push_back(p);
    }
  for (double a : {-0.5, 0.5})
    for (double b : {-0.5, 0.5})
      for (double c : {-0.5, 0.5}) v.push_back({a, b, c});
  return v;
}

}  // namespace

TEST_CASE("cube has 2^d vertices") {
  const auto e = enumerate_vertices(cube(3));
  CHECK(e.status == EnumerationStatus::bounded);
  CHECK(e.polytope.vertices.size() == 8);
  CHECK(facet_count(cube(3)) == 6);
  CHECK(volume_exact(cube(4)).value == doctest::Approx(1.0));
}

TEST_CASE("orthoscheme staircase vertices") {
  const auto e = enumerate_vertices(orthoscheme3<Rational>());
  REQUIRE(e.status == EnumerationStatus::bounded);
  std::set<std::vector<Rational>> got(e.polytope.vertices.begin(), e.polytope.vertices.end());
  const std::set<std::vector<Rational>> want{
      {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
  CHECK(got == want);
  CHECK(volume_exact(orthoscheme3<Rational>()).value == Rational(1, 6));
}

TEST_CASE("empty and unbounded outcomes are distinct") {
  HPolytope<double> half(2);
  half.add({{1, 0}, 1});
  CHECK(enumerate_vertices(half).status == EnumerationStatus::unbounded);
  CHECK_THROWS_AS(volume_exact(half), DomainError);

  auto none = cube(2);
  none.add({{1, 1}, -1});
  const auto e = enumerate_vertices(none);
  CHECK(e.status == EnumerationStatus::empty);
  CHECK(e.polytope.vertices.empty());
  CHECK(volume_exact(none).degenerate);
}

TEST_CASE("unit simplex volume is 1/d!") {
  double fact = 1;
  for (std::size_t d = 1; d <= 6; ++d) {
    fact *= static_cast<double>(d);
    HPolytope<double> p(d);
    for (std::size_t i = 0; i < d; ++i) {
      Vector n(d, 0.0);
      n[i] = -1;
      p.add({n, 0.0});
    }
    p.add({Vector(d, 1.0), 1.0});
    CHECK(volume_exact(p).value == doctest::Approx(1.0 / fact).epsilon(1e-12));
  }
}

TEST_CASE("Hill simplex hull volume matches the closed form") {
  const auto spec = make_simplex(3, 0.2);
  const auto hull = hull_of_points(spec.all_vertices());
  CHECK(hull.full_dimensional);
  CHECK(std::abs(volume_exact(hull.polytope).value - simplex_volume(3, 0.2)) < 1e-9);
}

TEST_CASE("rhombic dodecahedron has volume 2") {
  const auto hull = hull_of_points(rhombic_dodecahedron_vertices());
  CHECK(hull.polytope.halfspaces().size() == 12);
  CHECK(volume_exact(hull.polytope).value == doctest::Approx(2.0).epsilon(1e-12));
  const auto mc = volume_monte_carlo(hull.polytope, 200000, 5);
  CHECK(std::abs(mc.value - 2.0) < 4 * mc.std_error);
}

TEST_CASE("cuts add up") {
  const auto [lo, hi] = cut(cube(3), Halfspace<double>{{1, 0, 0}, 0.5});
  CHECK(volume_exact(lo).value == doctest::Approx(0.5));
  CHECK(volume_exact(hi).value == doctest::Approx(0.5));

  // O_3 sliced at sum = 1 and sum = 2.
  const auto o3 = orthoscheme3<Rational>();
  const auto [p0, rest] = cut(o3, Halfspace<Rational>{{1, 1, 1}, 1});
  const auto [p1, p2] = cut(rest, Halfspace<Rational>{{1, 1, 1}, 2});
  CHECK(volume_exact(p0).value == Rational(1, 36));
  CHECK(volume_exact(p1).value == Rational(4, 36));
  CHECK(volume_exact(p2).value == Rational(1, 36));

  // A plane missing the polytope leaves one half empty.
  const auto [all, nothing] = cut(cube(2), Halfspace<double>{{1, 0}, 5});
  CHECK(volume_exact(all).value == doctest::Approx(1.0));
  CHECK(volume_exact(nothing).degenerate);
}

TEST_CASE("congruence under isometries with reflection") {
  const auto spec = make_simplex(3, 0.1);
  VPolytope<double> p{3, spec.all_vertices()};
  const double c = std::cos(1.1), s = std::sin(1.1);
  const Isometry g(Matrix{{c, s, 0}, {-s, c, 0}, {0, 0, -1}}, {0.3, -2, 4});
  VPolytope<double> q{3, {}};
  for (const auto& v : p.vertices) q.vertices.push_back(g.apply(v));
  std::reverse(q.vertices.begin(), q.vertices.end());
  CHECK(congruent(p, q, 1e-9));
  CHECK(congruent(q, p, 1e-9));
  CHECK(congruent(p, p, 1e-9));

  VPolytope<double> o3{3, make_simplex(3, 0.0).all_vertices()};
  VPolytope<double> p3{3, make_simplex(3, 1.0 / 3).all_vertices()};
  CHECK_FALSE(congruent(o3, p3, 1e-9));
}

TEST_CASE("H to V to H keeps membership") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (const auto& p : {hull_of_points(rhombic_dodecahedron_vertices()).polytope,
                        simplex_halfspaces(make_simplex(3, -0.4)), cube(3)}) {
    const auto e = enumerate_vertices(p);
    const auto back = hull_of_points(e.polytope.vertices).polytope;
    int disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
      const Vector x{u(rng), u(rng), u(rng)};
      if (std::abs(p.max_violation(x)) < 1e-9) continue;
      if (p.contains(x, 0.0) != back.contains(x, 0.0)) ++disagreements;
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("images under isometries") {
  const Isometry flip(Matrix{{-1, 0}, {0, -1}}, {1, 1});
  const auto moved = cube(2).image(flip);
  CHECK(moved.contains(Vector{0.2, 0.9}, 0.0));
  CHECK_FALSE(moved.contains(Vector{1.2, 0.5}, 0.0));
  CHECK(volume_exact(moved).value == doctest::Approx(1.0));
}
