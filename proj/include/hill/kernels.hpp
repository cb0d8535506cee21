#pragma once

// Batch kernels. `reference` is a plain serial loop; `parallel` splits the
// same work over OpenMP threads. Both process points in fixed blocks with
// per-block engines, so their outputs are bit-identical.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hill/points.hpp"
#include "hill/simplex.hpp"

namespace hill {

struct BatchResult {
  PointSet points;
  std::vector<std::uint8_t> ok;  // 0 where the input row was rejected (output is NaN)

  std::size_t failures() const;
};

namespace reference {

PointSet sample_simplex(const SimplexSpec& spec, std::size_t count, std::uint64_t seed);
PointSet sample_brick(int n, std::size_t count, std::uint64_t seed);
BatchResult theta_batch(const PointSet& x, double tol);
BatchResult theta_inverse_batch(const PointSet& y, double tol);

}  // namespace reference

namespace parallel {

PointSet sample_simplex(const SimplexSpec& spec, std::size_t count, std::uint64_t seed);
PointSet sample_brick(int n, std::size_t count, std::uint64_t seed);
BatchResult theta_batch(const PointSet& x, double tol);
BatchResult theta_inverse_batch(const PointSet& y, double tol);

// Threads used by the parallel kernels (0 leaves the OpenMP default).
void set_threads(int threads);
int max_threads();

}  // namespace parallel

}  // namespace hill
