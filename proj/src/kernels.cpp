#include "hill/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include <omp.h>

#include "hill/errors.hpp"
#include "hill/schoebi.hpp"

namespace hill {

std::size_t BatchResult::failures() const {
  return static_cast<std::size_t>(std::count(ok.begin(), ok.end(), std::uint8_t{0}));
}

namespace {

void fill_simplex_block(const SimplexSpec& spec, PointSet& out, std::uint64_t seed,
                        std::size_t block) {
  auto rng = block_engine(seed, block);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto d = static_cast<std::size_t>(spec.n);
  Vector lambda(d);
  const std::size_t begin = block * kSampleBlock;
  const std::size_t end = std::min(out.size(), begin + kSampleBlock);
  for (std::size_t s = begin; s < end; ++s) {
    for (auto& v : lambda) v = u(rng);
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    auto row = out.row(s);
    std::fill(row.begin(), row.end(), 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) row[j] += lambda[i] * spec.generators(i, j);
  }
}

void fill_brick_block(const Vector& sides, PointSet& out, std::uint64_t seed, std::size_t block) {
  auto rng = block_engine(seed, block);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t begin = block * kSampleBlock;
  const std::size_t end = std::min(out.size(), begin + kSampleBlock);
  for (std::size_t s = begin; s < end; ++s) {
    auto row = out.row(s);
    for (std::size_t i = 0; i < sides.size(); ++i) row[i] = sides[i] * u(rng);
  }
}

template <class F>
void map_row(const PointSet& in, BatchResult& out, std::size_t s, double tol, F f) {
  auto dst = out.points.row(s);
  try {
    const auto v = f(in.row(s), tol);
    std::copy(v.begin(), v.end(), dst.begin());
    out.ok[s] = 1;
  } catch (const Error&) {
    std::fill(dst.begin(), dst.end(), std::numeric_limits<double>::quiet_NaN());
    out.ok[s] = 0;
  }
}

BatchResult prepare(const PointSet& in) {
  BatchResult r;
  r.points = PointSet(in.dim(), in.size());
  r.ok.assign(in.size(), 0);
  return r;
}

Vector forward(std::span<const double> x, double tol) { return theta(x, tol); }
Vector backward(std::span<const double> y, double tol) { return theta_inverse(y, tol); }

}  // namespace

namespace reference {

PointSet sample_simplex(const SimplexSpec& spec, std::size_t count, std::uint64_t seed) {
  PointSet out(static_cast<std::size_t>(spec.n), count);
  for (std::size_t b = 0; b < block_count(count); ++b) fill_simplex_block(spec, out, seed, b);
  return out;
}

PointSet sample_brick(int n, std::size_t count, std::uint64_t seed) {
  const auto sides = brick_dimensions(n);
  PointSet out(static_cast<std::size_t>(n), count);
  for (std::size_t b = 0; b < block_count(count); ++b) fill_brick_block(sides, out, seed, b);
  return out;
}

BatchResult theta_batch(const PointSet& x, double tol) {
  auto out = prepare(x);
  for (std::size_t s = 0; s < x.size(); ++s) map_row(x, out, s, tol, forward);
  return out;
}

BatchResult theta_inverse_batch(const PointSet& y, double tol) {
  auto out = prepare(y);
  for (std::size_t s = 0; s < y.size(); ++s) map_row(y, out, s, tol, backward);
  return out;
}

}  // namespace reference

namespace parallel {

PointSet sample_simplex(const SimplexSpec& spec, std::size_t count, std::uint64_t seed) {
  PointSet out(static_cast<std::size_t>(spec.n), count);
  const auto blocks = static_cast<std::int64_t>(block_count(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b)
    fill_simplex_block(spec, out, seed, static_cast<std::size_t>(b));
  return out;
}

PointSet sample_brick(int n, std::size_t count, std::uint64_t seed) {
  const auto sides = brick_dimensions(n);
  PointSet out(static_cast<std::size_t>(n), count);
  const auto blocks = static_cast<std::int64_t>(block_count(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b)
    fill_brick_block(sides, out, seed, static_cast<std::size_t>(b));
  return out;
}

BatchResult theta_batch(const PointSet& x, double tol) {
  auto out = prepare(x);
  const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t s = 0; s < n; ++s)
    map_row(x, out, static_cast<std::size_t>(s), tol, forward);
  return out;
}

BatchResult theta_inverse_batch(const PointSet& y, double tol) {
  auto out = prepare(y);
  const auto n = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t s = 0; s < n; ++s)
    map_row(y, out, static_cast<std::size_t>(s), tol, backward);
  return out;
}

void set_threads(int threads) {
  if (threads < 0) throw ConfigError("thread count must be non-negative");
  if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace parallel

}  // namespace hill
