#include <doctest.h>

#include <cmath>

#include "hill/kernels.hpp"
#include "hill/schoebi.hpp"
#include "hill/two_tile.hpp"

using namespace hill;

namespace {

bool same_bits(const PointSet& a, const PointSet& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const double x = a.data()[i], y = b.data()[i];
    if (!(x == y || (std::isnan(x) && std::isnan(y)))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree bit for bit") {
  for (int threads : {1, 3}) {
    parallel::set_threads(threads);
    const auto spec = make_simplex(5, 0.1);
    const std::size_t m = 3 * kSampleBlock + 17;
    const auto a = reference::sample_simplex(spec, m, 9);
    const auto b = parallel::sample_simplex(spec, m, 9);
    CHECK(same_bits(a, b));
    CHECK(same_bits(a, sample(spec, m, 9)));

    const auto o = reference::sample_simplex(make_simplex(5, 0.0), m, 10);
    const auto ya = reference::theta_batch(o, kDomainTolerance);
    const auto yb = parallel::theta_batch(o, kDomainTolerance);
    CHECK(same_bits(ya.points, yb.points));
    CHECK(ya.ok == yb.ok);

    const auto br = reference::sample_brick(5, m, 11);
    CHECK(same_bits(br, parallel::sample_brick(5, m, 11)));
    const auto xa = reference::theta_inverse_batch(br, kDomainTolerance);
    const auto xb = parallel::theta_inverse_batch(br, kDomainTolerance);
    CHECK(same_bits(xa.points, xb.points));

    const auto da = reference::dn_census(3, 20000, 4, true);
    const auto db = parallel::dn_census(3, 20000, 4, true);
    CHECK(da.offsets == db.offsets);
    CHECK(da.brick_points == db.brick_points);
  }
  parallel::set_threads(0);
}

TEST_CASE("brick samples lie in the brick") {
  const auto sides = brick_dimensions(6);
  const auto b = parallel::sample_brick(6, 5000, 2);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(in_brick(b.row(i), 0.0));
  double mean_last = 0;
  for (std::size_t i = 0; i < b.size(); ++i) mean_last += b.row(i)[5];
  CHECK(mean_last / 5000 == doctest::Approx(sides[5] / 2).epsilon(0.05));
}

TEST_CASE("rejected rows are flagged and left as NaN") {
  PointSet x(3);
  x.push_back(Vector{0.5, 0.2, 0.1});
  x.push_back(Vector{0.5, 0.7, 0.1});
  x.push_back(Vector{0.9, 0.5, 0.1});
  for (const auto& r : {reference::theta_batch(x, kDomainTolerance), parallel::theta_batch(x, kDomainTolerance)}) {
    CHECK(r.failures() == 1);
    CHECK(r.ok == std::vector<std::uint8_t>{1, 0, 1});
    CHECK(std::isnan(r.points.row(1)[0]));
    CHECK(max_abs_diff(r.points.row(2), theta(Vector{0.9, 0.5, 0.1})) == 0.0);
  }
}
