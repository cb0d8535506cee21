#pragma once

// Uniform scalar quantizer on the brick coordinates y = Theta(x).
//
// plain:       x_hat = Theta^{-1}(y_hat). Theta^{-1} jumps across piece
//              boundaries, so a cell straddling one costs O(1) error.
// piece_aware: the code also carries the stage indices (r_n, ..., r_2) and
//              x_hat uses that piece's isometry, then is projected onto O_n.
//              The error is at most |y - y_hat|.

#include <cstdint>
#include <vector>

#include "hill/linalg.hpp"
#include "hill/points.hpp"

namespace hill {

enum class QuantizerMode { plain, piece_aware };

struct QuantizedPoint {
  std::vector<std::uint64_t> codes;  // one per brick axis, y_1 first
  std::vector<int> stage_indices;    // empty in plain mode
  Vector reconstruction;
  double squared_error = 0.0;
};

struct QuantizeResult {
  int rate_bits = 0;
  QuantizerMode mode = QuantizerMode::piece_aware;
  std::vector<QuantizedPoint> points;
  double mse = 0.0;  // mean over points of |x - x_hat|^2
};

// rate_bits in [1, 52]. Throws DomainError on points outside O_n.
QuantizeResult quantize(const PointSet& x, int rate_bits, QuantizerMode mode,
                        double tol = 1e-9);

// Euclidean projection onto O_n = {1 >= x_1 >= ... >= x_n >= 0}.
Vector project_to_orthoscheme(std::span<const double> x);

}  // namespace hill
