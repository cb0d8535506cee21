#include <doctest.h>

#include <sstream>

#include "hill/io.hpp"
#include "hill/simplex.hpp"

using namespace hill;

TEST_CASE("CSV round trip is exact") {
  const auto pts = sample(make_simplex(4, 0.1), 200, 6);
  std::stringstream ss;
  io::write_csv(ss, pts);
  const auto back = io::read_csv(ss);
  CHECK(back.dim() == 4);
  CHECK(back.data() == pts.data());
}

TEST_CASE("CSV parsing") {
  std::istringstream in("# header\n0.5, 0.25 ,+1e-3\n\n1,2,3\n");
  const auto p = io::read_csv(in);
  REQUIRE(p.size() == 2);
  CHECK(p.row(0)[1] == 0.25);
  CHECK(p.row(0)[2] == 1e-3);

  std::istringstream ragged("1,2,3\n1,2\n");
  CHECK_THROWS_AS(io::read_csv(ragged), io::ParseError);
  std::istringstream word("1,abc\n");
  CHECK_THROWS_AS(io::read_csv(word), io::ParseError);
  std::istringstream nan("1,nan\n");
  CHECK_THROWS_AS(io::read_csv(nan), io::ParseError);
  std::istringstream fixed("1,2\n");
  CHECK_THROWS_AS(io::read_csv(fixed, 3), io::ParseError);
  std::istringstream empty("");
  CHECK(io::read_csv(empty).empty());
  CHECK_THROWS_AS(io::read_csv_file("/nonexistent/points.csv"), io::ParseError);
}

TEST_CASE("shortest round-trip formatting") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(-2.0) == "-2");
  const double v = 1.0 / 3;
  CHECK(std::stod(io::format_double(v)) == v);
}

TEST_CASE("polytope JSON") {
  const auto p = simplex_halfspaces(make_simplex(3, 0.0));
  const auto j = io::polytope_json(p);
  CHECK(j.at("vertices").size() == 4);
  const auto back = io::polytope_from_json(j);
  CHECK(back.halfspaces().size() == p.halfspaces().size());
  CHECK(volume_exact(back).value == doctest::Approx(1.0 / 6));

  HPolytope<Rational> r(2);
  r.add({{Rational(1), Rational(0)}, Rational(1, 3)});
  r.add({{Rational(-1), Rational(0)}, Rational(0)});
  r.add({{Rational(0), Rational(1)}, Rational(1)});
  r.add({{Rational(0), Rational(-1)}, Rational(0)});
  const auto jr = io::polytope_json(r);
  CHECK(jr.contains("vertices_exact"));
  CHECK(jr.dump().find("1/3") != std::string::npos);

  CHECK_THROWS_AS(io::polytope_from_json(nlohmann::json::parse(R"({"halfspaces": []})")), io::ParseError);
  CHECK_THROWS_AS(io::polytope_from_json(nlohmann::json::parse(R"({"x": 1})")), io::ParseError);
}

TEST_CASE("OFF and SVG writers") {
  std::ostringstream off;
  io::write_off(off, simplex_halfspaces(make_simplex(3, 0.0)));
  CHECK(off.str().rfind("OFF\n4 4 0\n", 0) == 0);
  CHECK_THROWS_AS(io::write_off(off, simplex_halfspaces(make_simplex(2, 0.0))), DimensionMismatch);

  std::ostringstream svg;
  io::write_svg(svg, {io::order_polygon({{1, 1}, {0, 0}, {1, 0}})}, {"A"});
  CHECK(svg.str().find("<polygon") != std::string::npos);
  CHECK(svg.str().find(">A</text>") != std::string::npos);
}
