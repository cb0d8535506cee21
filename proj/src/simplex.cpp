#include "hill/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "hill/kernels.hpp"

namespace hill {

std::vector<Vector> SimplexSpec::all_vertices() const {
  std::vector<Vector> out;
  out.emplace_back(static_cast<std::size_t>(n), 0.0);
  for (std::size_t i = 0; i < vertices.rows(); ++i) out.push_back(vertices.row_vector(i));
  return out;
}

SimplexSpec make_simplex(int n, double w) {
  // for_simplex validates n and the range of w.
  const auto params = ShiftMapParams::for_simplex(n, w);
  SimplexSpec s;
  s.n = n;
  s.w = w;
  s.a = params.a;
  s.b = params.b;
  const auto dim = static_cast<std::size_t>(n);
  s.generators = Matrix(dim, dim, s.b);
  for (std::size_t i = 0; i < dim; ++i) s.generators(i, i) = s.a;
  s.vertices = Matrix(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      s.vertices(i, j) = (i == 0 ? 0.0 : s.vertices(i - 1, j)) + s.generators(i, j);
  auto inv = inverse(s.generators, 1e-14);
  if (!inv) throw SingularMatrix("Hill simplex generators are singular");
  s.generators_inverse = std::move(*inv);
  return s;
}

double simplex_volume(int n, double w) {
  (void)ShiftMapParams::for_simplex(n, w);
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  return std::pow(1.0 + w, (n - 1) / 2.0) * std::sqrt(1.0 - w * (n - 1)) / fact;
}

Vector order_coordinates(const SimplexSpec& spec, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(spec.n))
    throw DimensionMismatch("point length " + std::to_string(x.size()) + " != n");
  return row_times(x, spec.generators_inverse);
}

bool contains(const SimplexSpec& spec, std::span<const double> x, double tol) {
  const auto lambda = order_coordinates(spec, x);
  if (lambda.front() > 1.0 + tol || lambda.back() < -tol) return false;
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i + 1] > lambda[i] + tol) return false;
  return true;
}

HPolytope<double> simplex_halfspaces(const SimplexSpec& spec) {
  const auto d = static_cast<std::size_t>(spec.n);
  const auto& inv = spec.generators_inverse;
  auto column = [&](std::size_t j) {
    Vector c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = inv(i, j);
    return c;
  };
  HPolytope<double> p(d);
  p.add({column(0), 1.0});
  for (std::size_t j = 0; j + 1 < d; ++j) {
    auto hi = column(j + 1);
    auto lo = column(j);
    for (std::size_t i = 0; i < d; ++i) hi[i] -= lo[i];
    p.add({std::move(hi), 0.0});
  }
  auto last = column(d - 1);
  for (auto& v : last) v = -v;
  p.add({std::move(last), 0.0});
  return p;
}

PointSet sample(const SimplexSpec& spec, std::size_t count, std::uint64_t seed) {
  return parallel::sample_simplex(spec, count, seed);
}

std::vector<Vector> PnVariant::with_origin() const {
  std::vector<Vector> out;
  out.emplace_back(vertices.cols(), 0.0);
  for (std::size_t i = 0; i < vertices.rows(); ++i) out.push_back(vertices.row_vector(i));
  return out;
}

std::array<PnVariant, 3> pn_variants(int n) {
  if (n < 1) throw InvalidDimension("pn_variants: n must be >= 1");
  const auto d = static_cast<std::size_t>(n);
  const double scale = std::sqrt((n + 1.0) / n);

  PnVariant standard{PnTag::standard, make_simplex(n, 1.0 / n).vertices};

  PnVariant projected{PnTag::projected, Matrix(d, d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      projected.vertices(i, j) = scale * static_cast<double>(i + 1) /
                                 std::sqrt(static_cast<double>((j + 1) * (j + 2)));

  PnVariant coset{PnTag::coset, Matrix(d, d + 1)};
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = 0; j <= d; ++j)
      coset.vertices(i - 1, j) =
          scale * (j < i ? static_cast<double>(d + 1 - i) : -static_cast<double>(i)) / (n + 1.0);

  Matrix padded(d, d + 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) padded(i, j) = projected.vertices(i, j);
  if (max_abs_diff(coset.vertices * build_M(n + 1), padded) > 1e-12)
    throw Error("pn_variants: coset form does not rotate onto the projected form");
  if (max_abs_diff(projected.vertices * build_M(n).transpose(), standard.vertices) > 1e-12)
    throw Error("pn_variants: projected form does not rotate onto the standard form");
  return {std::move(standard), std::move(projected), std::move(coset)};
}

}  // namespace hill
