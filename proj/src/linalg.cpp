#include "hill/linalg.hpp"

#include <cmath>
#include <string>

namespace hill {

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("max_abs_diff: shape mismatch");
  return max_abs_diff(std::span<const double>(a.data()), std::span<const double>(b.data()));
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch("max_abs_diff: length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Matrix build_M(int n) {
  if (n < 1) throw InvalidDimension("build_M: n must be >= 1, got " + std::to_string(n));
  const auto dim = static_cast<std::size_t>(n);
  Matrix m(dim, dim);
  for (std::size_t i = 1; i < dim; ++i) {
    const double p = 1.0 / std::sqrt(static_cast<double>(i * (i + 1)));
    for (std::size_t r = 0; r < i; ++r) m(r, i - 1) = p;
    m(i, i - 1) = -static_cast<double>(i) * p;
  }
  const double last = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t r = 0; r < dim; ++r) m(r, dim - 1) = last;
  return m;
}

Matrix build_N(int n) {
  if (n < 2) throw InvalidDimension("build_N: n must be >= 2, got " + std::to_string(n));
  return build_M(n).leading_columns(static_cast<std::size_t>(n - 1)) * build_M(n - 1).transpose();
}

void apply_N(std::span<const double> x, std::span<double> out, OpCounter* ops) {
  const std::size_t k = x.size();
  if (k < 2 || out.size() != k - 1) throw DimensionMismatch("apply_N: expected |out| = |x| - 1 >= 1");
  const double rk = std::sqrt(static_cast<double>(k));
  const double q = (1.0 - 1.0 / rk) / static_cast<double>(k - 1);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < k; ++i) s += x[i];
  const double common = q * s + x[k - 1] / rk;
  for (std::size_t j = 0; j + 1 < k; ++j) out[j] = x[j] - common;
  // sum, q*s + tail, and one subtraction per output
  count_ops(ops, (k - 2) + 3 + (k - 1));
}

void apply_N_transpose(std::span<const double> z, std::span<double> out, OpCounter* ops) {
  const std::size_t k = out.size();
  if (k < 2 || z.size() != k - 1)
    throw DimensionMismatch("apply_N_transpose: expected |out| = |z| + 1 >= 2");
  const double rk = std::sqrt(static_cast<double>(k));
  const double q = (1.0 - 1.0 / rk) / static_cast<double>(k - 1);
  double s = 0.0;
  for (double v : z) s += v;
  const double qs = q * s;
  for (std::size_t i = 0; i + 1 < k; ++i) out[i] = z[i] - qs;
  out[k - 1] = -s / rk;
  count_ops(ops, (k - 2) + 2 + (k - 1));
}

ShiftMapParams::ShiftMapParams(int n_, double a_, double b_) : n(n_), a(a_), b(b_) {
  if (n < 1) throw InvalidDimension("shift map: n must be >= 1");
  if (!(a - b > 0.0)) throw ParameterRange("shift map: requires a - b > 0");
}

ShiftMapParams ShiftMapParams::for_simplex(int n, double w) {
  if (n < 1) throw InvalidDimension("shift map: n must be >= 1");
  const double upper = n == 1 ? INFINITY : 1.0 / (n - 1);
  if (!(w > -1.0 && w < upper))
    throw ParameterRange("w = " + std::to_string(w) + " outside (-1, 1/(n-1))");
  const double b = (std::sqrt(1.0 - w * (n - 1)) - std::sqrt(1.0 + w)) / n;
  return ShiftMapParams(n, b + std::sqrt(1.0 + w), b);
}

namespace {

long long floor_div(long long num, long long den) {
  long long q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace

void phi_into(const ShiftMapParams& params, std::span<const double> x, long long power,
              std::span<double> out, OpCounter* ops) {
  const auto n = static_cast<long long>(params.n);
  if (static_cast<long long>(x.size()) != n || out.size() != x.size())
    throw DimensionMismatch("phi: point length differs from n");
  for (long long p = 0; p < n; ++p) {
    const long long target = p + power;
    const long long wraps = floor_div(target, n);
    const long long dest = target - wraps * n;
    out[static_cast<std::size_t>(dest)] =
        x[static_cast<std::size_t>(p)] + static_cast<double>(wraps) * params.a +
        static_cast<double>(power - wraps) * params.b;
  }
  count_ops(ops, static_cast<std::uint64_t>(n) * 4);
}

Vector phi(const ShiftMapParams& params, std::span<const double> x, long long power) {
  Vector out(x.size());
  phi_into(params, x, power, out);
  return out;
}

}  // namespace hill
