#include <doctest.h>

#include <cmath>

#include "hill/quantize.hpp"
#include "hill/schoebi.hpp"

using namespace hill;

namespace {

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

}  // namespace

TEST_CASE("projection onto the orthoscheme") {
  CHECK(project_to_orthoscheme(Vector{0.9, 0.5, 0.1}) == Vector{0.9, 0.5, 0.1});
  const auto p = project_to_orthoscheme(Vector{0.2, 0.6, 0.1});
  CHECK(p[0] == doctest::Approx(0.4));
  CHECK(p[1] == doctest::Approx(0.4));
  CHECK(p[2] == doctest::Approx(0.1));
  CHECK(project_to_orthoscheme(Vector{1.5, -0.2}) == Vector{1.0, 0.0});
}

TEST_CASE("piece-aware error decays as 2^-2R") {
  for (int n : {3, 5}) {
    const auto pts = sample(make_simplex(n, 0.0), 4000, 31);
    std::vector<double> rates, logs;
    for (int r = 4; r <= 12; ++r) {
      const auto q = quantize(pts, r, QuantizerMode::piece_aware);
      rates.push_back(r);
      logs.push_back(std::log2(q.mse));
      for (const auto& p : q.points) {
        CHECK(in_orthoscheme(p.reconstruction, 0.0));
        CHECK(p.stage_indices.size() == static_cast<std::size_t>(n - 1));
      }
    }
    CHECK(std::abs(slope(rates, logs) + 2.0) <= 0.1);
  }
}

TEST_CASE("high rate is nearly lossless") {
  const auto pts = sample(make_simplex(4, 0.0), 500, 2);
  CHECK(quantize(pts, 40, QuantizerMode::piece_aware).mse < 1e-20);
  const auto plain = quantize(pts, 40, QuantizerMode::plain);
  CHECK(plain.mse < 1e-20);
  for (const auto& p : plain.points) CHECK(p.stage_indices.empty());
}

TEST_CASE("codes are in range and errors are bounded by the cell") {
  const int n = 4, rate = 6;
  const auto sides = brick_dimensions(n);
  const auto pts = sample(make_simplex(n, 0.0), 1000, 3);
  const auto q = quantize(pts, rate, QuantizerMode::piece_aware);
  double cell = 0;
  for (double s : sides) cell += std::pow(s / std::ldexp(1.0, rate) / 2, 2);
  for (const auto& p : q.points) {
    for (auto c : p.codes) CHECK(c < (1u << rate));
    CHECK(p.squared_error <= cell + 1e-15);
  }
}

TEST_CASE("quantizer argument checks") {
  const auto pts = sample(make_simplex(3, 0.0), 10, 1);
  CHECK_THROWS_AS(quantize(pts, 0, QuantizerMode::plain), ParameterRange);
  CHECK_THROWS_AS(quantize(pts, 53, QuantizerMode::plain), ParameterRange);
  PointSet bad(3);
  bad.push_back(Vector{0.1, 0.5, 0.2});
  CHECK_THROWS_AS(quantize(bad, 8, QuantizerMode::plain), DomainError);
}
