#pragma once

// Hill simplices Q_n(w): the convex hull of 0, v_1, v_1+v_2, ..., v_1+...+v_n
// where v_i = (b,..,b,a,b,..,b) are unit vectors with v_i·v_j = -w.
// O_n = Q_n(0) is the orthoscheme, P_n = Q_n(1/n).

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hill/linalg.hpp"
#include "hill/points.hpp"
#include "hill/polytope.hpp"

namespace hill {

struct SimplexSpec {
  int n = 1;
  double w = 0.0;
  double a = 1.0;
  double b = 0.0;
  Matrix generators;           // row i is v_{i+1}
  Matrix vertices;             // row i is v_1 + ... + v_{i+1}
  Matrix generators_inverse;

  ShiftMapParams shift_map() const { return ShiftMapParams(n, a, b); }

  // a + (n-1) b = sqrt(1 - w(n-1)); the apex is this value in every coordinate.
  double apex_level() const { return a + (n - 1) * b; }

  // The n+1 vertices, origin first.
  std::vector<Vector> all_vertices() const;
};

// Throws ParameterRange unless -1 < w < 1/(n-1) (any w > -1 for n = 1).
SimplexSpec make_simplex(int n, double w);

// (1+w)^{(n-1)/2} (1-w(n-1))^{1/2} / n!
double simplex_volume(int n, double w);

// lambda with x = sum lambda_i v_i.
Vector order_coordinates(const SimplexSpec& spec, std::span<const double> x);

// 1 + tol >= lambda_1 >= ... >= lambda_n >= -tol. Negative tol tests the
// open interior.
bool contains(const SimplexSpec& spec, std::span<const double> x, double tol);

// Same simplex as an H-polytope (n+1 halfspaces).
HPolytope<double> simplex_halfspaces(const SimplexSpec& spec);

// i.i.d. uniform points: descending sorted uniforms mapped through the
// generators. Deterministic in `seed`.
PointSet sample(const SimplexSpec& spec, std::size_t count, std::uint64_t seed);

enum class PnTag { standard, projected, coset };

struct PnVariant {
  PnTag tag = PnTag::standard;
  Matrix vertices;  // non-origin vertices as rows; the origin is implied

  std::vector<Vector> with_origin() const;
};

// Standard P_n, the projected form (upper-triangular rows built from
// p_i = 1/sqrt(i(i+1))) and the coset-representative form in R^{n+1}.
// Throws Error if the change-of-basis identities linking them fail.
std::array<PnVariant, 3> pn_variants(int n);

// Squared distance between vertices i and j (0 = origin) of the standard
// Q_n(w): with m = |i - j| it is m(1+w) - w m^2. Exact for Rational.
template <class T>
T hill_squared_distance(std::size_t i, std::size_t j, const T& w) {
  const T m = T(static_cast<long long>(i > j ? i - j : j - i));
  return m * (T(1) + w) - w * m * m;
}

}  // namespace hill
