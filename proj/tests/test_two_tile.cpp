#include <doctest.h>

#include <cmath>
#include <random>

#include "hill/two_tile.hpp"

using namespace hill;

namespace {

// Nearest D_n point by search over coordinates in {-2..2} around round(x).
double brute_force_distance(std::span<const double> x) {
  const std::size_t n = x.size();
  IntPoint base(n), cur(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = static_cast<long long>(std::llround(x[i]));
  double best = INFINITY;
  std::vector<int> digit(n, -2);
  while (true) {
    long long sum = 0;
    double d = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cur[i] = base[i] + digit[i];
      sum += cur[i];
      d += (x[i] - cur[i]) * (x[i] - cur[i]);
    }
    if (sum % 2 == 0) best = std::min(best, d);
    std::size_t i = 0;
    while (i < n && digit[i] == 2) digit[i++] = -2;
    if (i == n) break;
    ++digit[i];
  }
  return best;
}

double dist2(std::span<const double> x, const IntPoint& p) {
  double d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] - p[i]) * (x[i] - p[i]);
  return d;
}

}  // namespace

TEST_CASE("square instance") {
  const auto rep = check_two_tile(example_square(), 10000, 1);
  CHECK(rep.passed());
  CHECK(rep.pieces_a.size() == 2);
  CHECK(rep.pieces_b.size() == 2);
  CHECK(rep.volume_a == doctest::Approx(0.5));
  CHECK(rep.cover_a.overlaps == 0);
  CHECK(rep.cover_b.uncovered == 0);
  double total = 0;
  for (const auto& p : rep.pieces_a) total += p.volume;
  CHECK(total == doctest::Approx(0.5));
}

TEST_CASE("strip instance") {
  const auto rep = check_two_tile(example_strip(), 10000, 2);
  CHECK(rep.passed());
  REQUIRE(rep.pieces_a.size() == 2);
  // A ∩ B and A ∩ B^phi are both triangles.
  for (const auto& p : rep.pieces_a) {
    CHECK(p.vertices.size() == 3);
    CHECK(std::abs(p.mc_volume - p.volume) < 5 * p.mc_error + 1e-12);
  }
  const auto j = rep.to_json();
  CHECK(j.at("passed").get<bool>());
}

TEST_CASE("volume mismatch is reported") {
  auto inst = example_square();
  inst.tile_b = polygon_halfspaces({{0, 0}, {0.6, 0}, {0.6, 1}, {0, 1}});
  const auto rep = check_two_tile(inst, 2000, 3);
  CHECK(rep.volume_mismatch);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("missing sampling window is a configuration error") {
  auto inst = example_square();
  inst.omega.lo.clear();
  inst.omega.hi.clear();
  CHECK_THROWS_AS(check_two_tile(inst, 100, 1), ConfigError);
}

TEST_CASE("group enumeration") {
  GroupSpec g;
  g.kind = GroupSpec::Kind::finite;
  g.generators = {Isometry(Matrix{{0, 1}, {-1, 0}}, {0, 0})};
  CHECK(g.elements(100).size() == 4);
  const auto strip = example_strip();
  const auto els = strip.group.elements(9);
  CHECK(els.size() == 9);
  CHECK(els.front().equals(Isometry::identity(2), 1e-12));
}

TEST_CASE("instance from JSON") {
  const auto j = nlohmann::json::parse(R"({
    "dimension": 2,
    "tile_a": [{"normal": [0, -1], "offset": 0}, {"normal": [1, 0], "offset": 1},
               {"normal": [-1, 1], "offset": 0}],
    "tile_b": [{"normal": [-1, 0], "offset": 0}, {"normal": [1, 0], "offset": 0.5},
               {"normal": [0, -1], "offset": 0}, {"normal": [0, 1], "offset": 1}],
    "group": {"kind": "finite", "generators": [{"matrix": [[-1, 0], [0, -1]], "shift": [1, 1]}]},
    "omega": {"type": "window", "params": {"lo": [0, 0], "hi": [1, 1]}},
    "element_bound": 4
  })");
  const auto inst = load_instance(j);
  const auto rep = check_two_tile(inst, 5000, 4);
  CHECK(rep.passed());
  CHECK(rep.pieces_a.size() == 2);

  auto bad = j;
  bad["omega"]["type"] = "disk";
  CHECK_THROWS_AS(load_instance(bad), ConfigError);
  bad = j;
  bad["group"]["generators"][0]["matrix"] = {{2, 0}, {0, 1}};
  CHECK_THROWS_AS(load_instance(bad), ConfigError);
}

TEST_CASE("Dudeney constants") {
  const auto c = dudeney_build();
  CHECK(c.c1 == doctest::Approx(std::sqrt(3.0) / 4));
  CHECK(c.c2 * c.c2 == doctest::Approx(c.c1));
  CHECK(std::abs(c.offset() - 0.009015) <= 1e-5);
  CHECK(std::abs(c.angle_clg_degrees() - 41.15) <= 0.01);
  CHECK(c.at("P")[0] == doctest::Approx(c.offset()));
  CHECK(c.at("P")[1] == doctest::Approx(-0.8660).epsilon(1e-4));
  // DEFG is a square of side c2.
  const std::vector<std::string> sq{"D", "E", "F", "G"};
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(distance(c.at(sq[i]), c.at(sq[(i + 1) % 4])) == doctest::Approx(c.c2).epsilon(1e-12));
  CHECK(distance(c.at("D"), c.at("F")) == doctest::Approx(c.c2 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("Dudeney pieces") {
  const auto c = dudeney_build();
  const auto rep = dudeney_check(c, 10000, 5);
  CHECK(rep.two_tile.passed());
  CHECK(rep.exact_piece_set);
  CHECK(rep.matched.size() == 4);
  CHECK(std::abs(rep.area_sum - c.c1) < 1e-9);
  CHECK(std::abs(rep.mapped_area_sum - c.c2 * c.c2) < 1e-9);
  CHECK(rep.mapped_inside);
}

TEST_CASE("D_n decoding") {
  const Vector zero{0, 0, 0};
  CHECK(dn_decode(zero) == IntPoint{0, 0, 0});
  const Vector e1{1, 0, 0, 0};
  const auto p = dn_decode(e1);
  CHECK(dist2(e1, p) == doctest::Approx(1.0));
  CHECK(dn_decode(e1) == p);
  CHECK_THROWS_AS(dn_decode(Vector{0.3, 0.2}), InvalidDimension);

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-3, 3);
  for (std::size_t n : {3u, 4u})
    for (int t = 0; t < 10000; ++t) {
      Vector x(n);
      for (auto& v : x) v = u(rng);
      const auto got = dn_decode(x);
      long long sum = 0;
      for (auto v : got) sum += v;
      CHECK(sum % 2 == 0);
      CHECK(std::abs(dist2(x, got) - brute_force_distance(x)) < 1e-12);
    }
}

TEST_CASE("D_n cell to brick") {
  const auto z = dn_voronoi_to_brick(Vector{0, 0, 0});
  CHECK(z.offset == IntPoint{0, 0, 0});
  CHECK(z.y == Vector{0, 0, 0});
  CHECK_THROWS_AS(dn_voronoi_to_brick(Vector{0.9, 0.9, 0}), DomainError);

  const auto c3 = parallel::dn_census(3, 50000, 6);
  CHECK(c3.offsets.size() == 6);
  CHECK(c3.round_trip_failures == 0);
  const auto c5 = parallel::dn_census(5, 50000, 7);
  CHECK(c5.offsets.size() == 10);
  CHECK(c5.round_trip_failures == 0);
}
