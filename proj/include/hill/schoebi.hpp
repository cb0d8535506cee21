#pragma once

// n-piece dissection of Q_n(w) into the prism c·P_{n-1} x I_l, and the
// recursive brick map Theta: O_n -> Pi with its inverse.
//
// Theta runs one "stage" per dimension. The first stage cuts O_n along
// sum(x) = 1, 2, ..., n-1, slides piece r back with phi^{-r}, and splits
// the result into a cross-section coordinate (fed to the next stage) and
// an axial coordinate y_n. Later stages do the same on unit-scale P_k and
// keep one accumulated scale factor. Each stage costs O(k), so Theta is
// O(n^2).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hill/linalg.hpp"
#include "hill/polytope.hpp"
#include "hill/simplex.hpp"

namespace hill {

inline constexpr double kDomainTolerance = 1e-9;

struct PrismSpec {
  int n = 2;
  double w = 0.0;
  double cross_scale = 0.0;  // c
  double length = 0.0;       // l
  Vector axis;               // (1,...,1)/sqrt(n)
  Matrix base_vertices;      // c·P_{n-1} inside sum(x) = 0, origin first
  ShiftMapParams walls;      // a, b of Q_n(w); the walls use a - b

  double volume() const;
  HPolytope<double> halfspaces() const;
  std::vector<Vector> all_vertices() const;  // base then top
};

// c = sqrt((n-1)(w+1)/n), l = sqrt((1-w(n-1))/n).
PrismSpec make_prism(int n, double w);

// The three-dimensional prism with c = sqrt(2(w+1)/3), l = sqrt((1-2w)/3).
PrismSpec schoebi3d_prism(double w);

// x_1 >= x_2 >= ... >= x_n >= x_1 - (a - b), each within tol.
bool prism_walls_contains(const ShiftMapParams& params, std::span<const double> x, double tol);

// Piece containing a point at normalized level t (t = 1, 2, ... are the
// cuts). Points on a cut belong to the lower piece; result in [0, pieces-1].
int piece_index(double level, int pieces);

struct StageResult {
  int piece = 0;
  Vector reassembled;
};

// Which of the n pieces of Q_n(w) contains x, and x moved into the prism.
StageResult dissect_stage(const SimplexSpec& spec, std::span<const double> x,
                          double tol = kDomainTolerance);
StageResult dissect_stage(int n, double w, std::span<const double> x,
                          double tol = kDomainTolerance);

struct StepOutput {
  Vector next;  // cross-section point, length k-1, in scaled standard P_{k-1}
  double y = 0.0;
  int piece = 0;
};

// First stage on O_n. `next` lies in sqrt((n-1)/n)·P_{n-1}.
StepOutput step_A(std::span<const double> x, double tol = kDomainTolerance);

// Later stage on unit-scale P_k (k >= 2). `next` lies in
// (sqrt(k^2-1)/k)·P_{k-1}; y is the unit-scale axial coordinate.
StepOutput step_B(int k, std::span<const double> x, double tol = kDomainTolerance);

// Side lengths (y_1, ..., y_n) of the brick Pi, from the stage recursion.
Vector brick_dimensions(int n);

// Stage data for one point: stage_indices = (r_n, r_{n-1}, ..., r_2) and
// outputs = (y_n, ..., y_1).
struct BrickMap {
  int n = 0;
  std::vector<int> stage_indices;
  Vector outputs;
};

// Theta(x) = (y_1, ..., y_n). Inputs within `tol` of O_n are projected
// onto it; anything further out throws DomainError.
Vector theta(std::span<const double> x, double tol = kDomainTolerance, BrickMap* trace = nullptr,
             OpCounter* ops = nullptr);

// Inverse map; each stage's piece index is recovered by counting
// coordinates below a threshold, independently of the forward pass.
Vector theta_inverse(std::span<const double> y, double tol = kDomainTolerance,
                     BrickMap* trace = nullptr);

// Inverse with the stage indices (r_n, ..., r_2) supplied instead of
// recovered. Extends each piece's isometry to any y in the brick.
Vector theta_inverse_with_pieces(std::span<const double> y, std::span<const int> stage_indices,
                                 double tol = kDomainTolerance);

bool in_orthoscheme(std::span<const double> x, double tol);
bool in_brick(std::span<const double> y, double tol);

struct TilingTrajectory {
  ShiftMapParams params;
  long long first = 0;
  std::vector<Vector> points;  // u_first, ..., u_last

  long long last() const { return first + static_cast<long long>(points.size()) - 1; }
  const Vector& u(long long i) const { return points.at(static_cast<std::size_t>(i - first)); }
};

// u_i = phi^i(0) for i_min <= i <= i_max.
TilingTrajectory build_tiling_window(int n, double w, long long i_min, long long i_max);

struct TilingWindowReport {
  std::size_t simplices = 0;
  bool successive_congruent = true;
  bool shared_faces = true;
  double max_volume_error = 0.0;
  std::size_t samples = 0;
  std::size_t overlaps = 0;
  bool passed() const {
    return successive_congruent && shared_faces && overlaps == 0 && max_volume_error < 1e-9;
  }
};

// Checks each window simplex conv(u_i..u_{i+n}) against Q_n(w), shared
// faces, volumes, and Monte Carlo interior disjointness.
TilingWindowReport verify_tiling_window(const TilingTrajectory& traj, std::size_t samples,
                                        std::uint64_t seed);

struct PrismTilingReport {
  int n = 0;
  double w = 0.0;
  std::size_t samples = 0;
  std::size_t resampled = 0;
  std::size_t uncovered = 0;
  std::size_t overlaps = 0;
  std::size_t forward_failures = 0;
  bool passed() const { return uncovered == 0 && overlaps == 0 && forward_failures == 0; }
};

// Monte Carlo check that the reassembled pieces phi^{-k}(piece k) cover the
// prism exactly once, and that dissect_stage lands every point of Q_n(w)
// inside the prism.
PrismTilingReport check_prism_tiling(int n, double w, std::size_t samples, std::uint64_t seed);

// Distinct (r_n, ..., r_2) vectors seen over uniform samples of O_n.
std::size_t count_pieces_recursive(int n, std::size_t samples, std::uint64_t seed);

}  // namespace hill
