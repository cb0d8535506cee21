#pragma once

// Small dense linear algebra used throughout the dissection code: a
// row-major matrix templated on the scalar (double or exact Rational),
// Gaussian elimination, isometries x -> x·L + t, the orthogonal change of
// basis M_n, the reduction matrix N_n and the cyclic shift maps phi.
//
// Points are row vectors; a matrix acts on the right.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hill/errors.hpp"
#include "hill/scalar.hpp"

namespace hill {

using Vector = std::vector<double>;

template <class T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  BasicMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static BasicMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return {};
    BasicMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged row list");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * m.cols_);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
  }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // First `k` columns.
  BasicMatrix leading_columns(std::size_t k) const {
    BasicMatrix out(rows_, k);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = BasicMatrix<double>;
using RationalMatrix = BasicMatrix<Rational>;

template <class T>
BasicMatrix<T> operator*(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  BasicMatrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
BasicMatrix<T> operator*(const T& s, BasicMatrix<T> m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto& v : m.row(i)) v *= s;
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

// ---------------------------------------------------------------------------
// vector helpers

template <class T>
std::vector<T> row_times(std::span<const T> x, const BasicMatrix<T>& m) {
  if (x.size() != m.rows()) throw DimensionMismatch("row vector times matrix: length mismatch");
  std::vector<T> out(m.cols(), T(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == T(0)) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

template <class T>
std::vector<T> row_times(const std::vector<T>& x, const BasicMatrix<T>& m) {
  return row_times(std::span<const T>(x), m);
}

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
std::vector<T> add(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
  std::vector<T> out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

template <class T>
std::vector<T> subtract(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw DimensionMismatch("subtract: length mismatch");
  std::vector<T> out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

template <class T>
std::vector<T> scale(const T& s, std::span<const T> a) {
  std::vector<T> out(a.begin(), a.end());
  for (auto& v : out) v *= s;
  return out;
}

template <class T>
T squared_distance(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw DimensionMismatch("distance: length mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    T d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

inline double coordinate_sum(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

// ---------------------------------------------------------------------------
// Gaussian elimination

namespace detail {

template <class T>
T magnitude(const T& v) {
  return v < T(0) ? T(-v) : v;
}

// Partial pivoting; returns the pivot row or npos when every candidate is
// (near) zero.
template <class T>
std::size_t find_pivot(const BasicMatrix<T>& a, std::size_t col, std::size_t from, double eps) {
  std::size_t best = static_cast<std::size_t>(-1);
  T best_mag(0);
  for (std::size_t r = from; r < a.rows(); ++r) {
    T m = magnitude(a(r, col));
    if (near_zero(m, eps)) continue;
    if (best == static_cast<std::size_t>(-1) || m > best_mag) {
      best = r;
      best_mag = m;
    }
  }
  return best;
}

template <class T>
void swap_rows(BasicMatrix<T>& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

}  // namespace detail

// Solves a·z = rhs for a square a (column-vector convention). Returns
// nullopt when a pivot falls below `eps` (exact zero for Rational).
template <class T>
std::optional<std::vector<T>> solve(BasicMatrix<T> a, std::vector<T> rhs, double eps = 1e-11) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.size() != n) throw DimensionMismatch("solve: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = detail::find_pivot(a, col, col, eps);
    if (p == static_cast<std::size_t>(-1)) return std::nullopt;
    detail::swap_rows(a, p, col);
    std::swap(rhs[p], rhs[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == T(0)) continue;
      T f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<T> z(n, T(0));
  for (std::size_t i = n; i-- > 0;) {
    T s = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * z[c];
    z[i] = s / a(i, i);
  }
  return z;
}

template <class T>
T determinant(BasicMatrix<T> a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("determinant of a non-square matrix");
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = detail::find_pivot(a, col, col, 0.0);
    if (p == static_cast<std::size_t>(-1)) return T(0);
    if (p != col) {
      detail::swap_rows(a, p, col);
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == T(0)) continue;
      T f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

template <class T>
std::size_t rank(BasicMatrix<T> a, double eps = 1e-11) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = detail::find_pivot(a, col, r, eps);
    if (p == static_cast<std::size_t>(-1)) continue;
    detail::swap_rows(a, p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col) == T(0)) continue;
      T f = a(i, col) / a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(i, c) -= f * a(r, c);
    }
    ++r;
  }
  return r;
}

template <class T>
std::optional<BasicMatrix<T>> inverse(const BasicMatrix<T>& a, double eps = 1e-11) {
  const std::size_t n = a.rows();
  BasicMatrix<T> inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<T> e(n, T(0));
    e[j] = T(1);
    auto col = solve(a, e, eps);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Isometries x -> x·L + t

template <class T>
class BasicIsometry {
 public:
  BasicIsometry() = default;

  // Throws DomainError unless `linear` is orthogonal within `tol` (exactly,
  // for Rational). Reflections are accepted.
  BasicIsometry(BasicMatrix<T> linear, std::vector<T> shift, double tol = 1e-12)
      : linear_(std::move(linear)), shift_(std::move(shift)) {
    const std::size_t n = linear_.rows();
    if (linear_.cols() != n || shift_.size() != n)
      throw DimensionMismatch("isometry: linear part must be n x n and shift length n");
    auto gram = linear_.transpose() * linear_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        T expect = i == j ? T(1) : T(0);
        if (!near_zero(T(gram(i, j) - expect), tol))
          throw DomainError("isometry: linear part is not orthogonal");
      }
  }

  static BasicIsometry identity(std::size_t n) {
    return BasicIsometry(BasicMatrix<T>::identity(n), std::vector<T>(n, T(0)));
  }

  static BasicIsometry translation(std::vector<T> shift) {
    auto n = shift.size();
    return BasicIsometry(BasicMatrix<T>::identity(n), std::move(shift));
  }

  std::size_t dim() const { return shift_.size(); }
  const BasicMatrix<T>& linear() const { return linear_; }
  const std::vector<T>& shift() const { return shift_; }

  std::vector<T> apply(std::span<const T> x) const {
    if (x.size() != dim()) throw DimensionMismatch("isometry: point dimension mismatch");
    auto y = row_times(x, linear_);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += shift_[i];
    return y;
  }
  std::vector<T> apply(const std::vector<T>& x) const { return apply(std::span<const T>(x)); }

  // x -> g(this(x))
  BasicIsometry then(const BasicIsometry& g) const {
    if (g.dim() != dim()) throw DimensionMismatch("isometry composition: dimension mismatch");
    BasicIsometry out;
    out.linear_ = linear_ * g.linear_;
    out.shift_ = g.apply(shift_);
    return out;
  }

  BasicIsometry inverse() const {
    BasicIsometry out;
    out.linear_ = linear_.transpose();
    out.shift_ = row_times(shift_, out.linear_);
    for (auto& v : out.shift_) v = -v;
    return out;
  }

  T determinant() const { return hill::determinant(linear_); }

  bool equals(const BasicIsometry& g, double tol) const {
    if (g.dim() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!near_zero(T(shift_[i] - g.shift_[i]), tol)) return false;
      for (std::size_t j = 0; j < dim(); ++j)
        if (!near_zero(T(linear_(i, j) - g.linear_(i, j)), tol)) return false;
    }
    return true;
  }

 private:
  BasicMatrix<T> linear_;
  std::vector<T> shift_;
};

using Isometry = BasicIsometry<double>;
using RationalIsometry = BasicIsometry<Rational>;

// ---------------------------------------------------------------------------
// M_n, N_n and the shift maps

// Counts floating-point operations on coordinates; used to measure the
// asymptotic cost of the brick map.
struct OpCounter {
  std::uint64_t flops = 0;
  void add(std::uint64_t n) { flops += n; }
};

inline void count_ops(OpCounter* c, std::uint64_t n) {
  if (c) c->add(n);
}

// Orthogonal n x n matrix whose last column is (1,...,1)/sqrt(n) and whose
// column i < n has p_i = 1/sqrt(i(i+1)) in rows 1..i and -i p_i in row i+1.
Matrix build_M(int n);

// N_n = (M_n without its last column) · M_{n-1}^T, an n x (n-1) matrix.
Matrix build_N(int n);

// out = x · N_k in O(k) using the structure of the product:
// the top (k-1) x (k-1) block is I - q J with q = (1 - 1/sqrt k)/(k-1) and
// the last row is constant -1/sqrt k.
void apply_N(std::span<const double> x, std::span<double> out, OpCounter* ops = nullptr);

// out = z · N_k^T, the inverse direction (z has length k-1, out length k).
void apply_N_transpose(std::span<const double> z, std::span<double> out,
                       OpCounter* ops = nullptr);

struct ShiftMapParams {
  int n = 1;
  double a = 1.0;
  double b = 0.0;

  ShiftMapParams() = default;
  ShiftMapParams(int n_, double a_, double b_);

  // The constants a, b of the standard Q_n(w).
  static ShiftMapParams for_simplex(int n, double w);

  // Increment of the coordinate sum per forward application.
  double sum_step() const { return a + (n - 1) * b; }
};

// phi: (x_1..x_n) -> (x_n + a, x_1 + b, ..., x_{n-1} + b), applied `power`
// times (negative powers apply the inverse). Runs in O(n) for any power.
Vector phi(const ShiftMapParams& params, std::span<const double> x, long long power);

void phi_into(const ShiftMapParams& params, std::span<const double> x, long long power,
              std::span<double> out, OpCounter* ops = nullptr);

}  // namespace hill
