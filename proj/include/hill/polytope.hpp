#pragma once

// Brute-force convex polytope toolkit for small dimensions (d <= 6, a few
// dozen halfspaces): H -> V by d-subset enumeration, V -> H by d-subset
// hyperplanes, exact triangulated volume, cuts, images under isometries and
// congruence testing by distance matrices.
//
// Everything is templated on the scalar. With double the tolerances in
// `Tolerances` apply; with Rational all predicates are exact.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "hill/errors.hpp"
#include "hill/linalg.hpp"
#include "hill/scalar.hpp"

namespace hill {

template <class T>
struct Halfspace {
  std::vector<T> normal;
  T offset{};

  // normal·x - offset; non-positive inside.
  T eval(std::span<const T> x) const { return dot(std::span<const T>(normal), x) - offset; }
};

template <class T>
class HPolytope {
 public:
  HPolytope() = default;
  explicit HPolytope(std::size_t dim) : dim_(dim) {}
  HPolytope(std::size_t dim, std::vector<Halfspace<T>> hs) : dim_(dim) {
    for (auto& h : hs) add(std::move(h));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace<T>>& halfspaces() const { return halfspaces_; }

  void add(Halfspace<T> h) {
    if (h.normal.size() != dim_) throw DimensionMismatch("halfspace normal has wrong dimension");
    halfspaces_.push_back(std::move(h));
  }

  // normal·x <= offset + tol for every halfspace.
  bool contains(std::span<const T> x, double tol) const {
    for (const auto& h : halfspaces_) {
      T v = h.eval(x);
      if (v > T(0) && !near_zero(v, tol)) return false;
    }
    return true;
  }
  bool contains(const std::vector<T>& x, double tol) const {
    return contains(std::span<const T>(x), tol);
  }

  // max_h (normal·x - offset); negative strictly inside.
  T max_violation(std::span<const T> x) const {
    T worst{};
    bool first = true;
    for (const auto& h : halfspaces_) {
      T v = h.eval(x);
      if (first || v > worst) worst = v;
      first = false;
    }
    return worst;
  }

  HPolytope intersect(const HPolytope& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("intersect: dimension mismatch");
    HPolytope out = *this;
    for (const auto& h : other.halfspaces_) out.halfspaces_.push_back(h);
    return out;
  }

  // {g(x) : x in this}.
  HPolytope image(const BasicIsometry<T>& g) const {
    if (g.dim() != dim_) throw DimensionMismatch("image: dimension mismatch");
    HPolytope out(dim_);
    for (const auto& h : halfspaces_) {
      Halfspace<T> moved;
      moved.normal = row_times(std::span<const T>(h.normal), g.linear());
      moved.offset = h.offset + dot(std::span<const T>(moved.normal), std::span<const T>(g.shift()));
      out.halfspaces_.push_back(std::move(moved));
    }
    return out;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Halfspace<T>> halfspaces_;
};

template <class T>
struct VPolytope {
  std::size_t dim = 0;
  std::vector<std::vector<T>> vertices;
};

enum class EnumerationStatus { bounded, empty, unbounded };

template <class T>
struct VertexEnumeration {
  EnumerationStatus status = EnumerationStatus::empty;
  VPolytope<T> polytope;
  // Indices of the halfspaces tight at each vertex.
  std::vector<std::vector<std::size_t>> tight;
};

struct Facet {
  std::size_t halfspace = 0;
  std::vector<std::size_t> vertices;
};

template <class T>
struct VolumeResult {
  T value{};
  double std_error = 0.0;
  bool degenerate = false;
  bool monte_carlo = false;
};

namespace detail {

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <class T>
bool same_point(std::span<const T> a, std::span<const T> b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!near_zero(T(a[i] - b[i]), tol)) return false;
  return true;
}

template <class T>
std::vector<std::vector<T>> dedup_points(const std::vector<std::vector<T>>& pts, double tol) {
  std::vector<std::vector<T>> out;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : out)
      if (same_point<T>(p, q, tol)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

template <class T>
T factorial(std::size_t d) {
  T f(1);
  for (std::size_t i = 2; i <= d; ++i) f *= T(static_cast<long long>(i));
  return f;
}

}  // namespace detail

// Dimension of the affine hull of the selected points (-1 for none).
template <class T>
int affine_dimension(const std::vector<std::vector<T>>& pts, std::span<const std::size_t> which,
                     double eps) {
  if (which.empty()) return -1;
  if (which.size() == 1) return 0;
  const auto& base = pts[which[0]];
  BasicMatrix<T> diff(which.size() - 1, base.size());
  for (std::size_t r = 1; r < which.size(); ++r)
    for (std::size_t c = 0; c < base.size(); ++c) diff(r - 1, c) = pts[which[r]][c] - base[c];
  return static_cast<int>(rank(diff, eps));
}

template <class T>
int affine_dimension(const std::vector<std::vector<T>>& pts, double eps) {
  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return affine_dimension(pts, std::span<const std::size_t>(all), eps);
}

namespace detail {

template <class T>
std::vector<std::vector<T>> raw_vertices(const std::vector<Halfspace<T>>& hs, std::size_t d,
                                         const Tolerances& tol) {
  std::vector<std::vector<T>> found;
  for_each_subset(hs.size(), d, [&](const std::vector<std::size_t>& idx) {
    BasicMatrix<T> a(d, d);
    std::vector<T> rhs(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) a(r, c) = hs[idx[r]].normal[c];
      rhs[r] = hs[idx[r]].offset;
    }
    auto x = solve(a, rhs, tol.pivot);
    if (!x) return;
    for (const auto& h : hs) {
      T v = h.eval(*x);
      if (v > T(0) && !near_zero(v, tol.geometric)) return;
    }
    for (const auto& q : found)
      if (same_point<T>(*x, q, tol.geometric)) return;
    found.push_back(std::move(*x));
  });
  return found;
}

}  // namespace detail

template <class T>
VertexEnumeration<T> enumerate_vertices(const HPolytope<T>& p, const Tolerances& tol = {}) {
  const std::size_t d = p.dim();
  VertexEnumeration<T> out;
  out.polytope.dim = d;
  if (d == 0) throw InvalidDimension("enumerate_vertices: zero-dimensional polytope");

  // Bounding box far outside every polytope in scope; a vertex on it means
  // the original constraints leave a direction free.
  const T big = T(1000000);
  auto hs = p.halfspaces();
  const std::size_t original = hs.size();
  for (std::size_t i = 0; i < d; ++i) {
    Halfspace<T> up{std::vector<T>(d, T(0)), big};
    up.normal[i] = T(1);
    Halfspace<T> down{std::vector<T>(d, T(0)), big};
    down.normal[i] = T(-1);
    hs.push_back(std::move(up));
    hs.push_back(std::move(down));
  }
  auto verts = detail::raw_vertices(hs, d, tol);
  if (verts.empty()) return out;
  for (const auto& v : verts)
    for (std::size_t i = original; i < hs.size(); ++i)
      if (near_zero(hs[i].eval(v), tol.geometric)) {
        out.status = EnumerationStatus::unbounded;
        return out;
      }
  out.status = EnumerationStatus::bounded;
  out.polytope.vertices = std::move(verts);
  for (const auto& v : out.polytope.vertices) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < original; ++i)
      if (near_zero(hs[i].eval(v), tol.geometric)) t.push_back(i);
    out.tight.push_back(std::move(t));
  }
  return out;
}

// Facets of a bounded enumeration: distinct tight vertex sets of affine
// dimension d-1.
template <class T>
std::vector<Facet> facets(const VertexEnumeration<T>& e, std::size_t halfspace_count,
                          const Tolerances& tol = {}) {
  std::vector<Facet> out;
  if (e.status != EnumerationStatus::bounded) return out;
  const std::size_t d = e.polytope.dim;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t h = 0; h < halfspace_count; ++h) {
    std::vector<std::size_t> on;
    for (std::size_t v = 0; v < e.tight.size(); ++v)
      if (std::find(e.tight[v].begin(), e.tight[v].end(), h) != e.tight[v].end()) on.push_back(v);
    if (affine_dimension(e.polytope.vertices, std::span<const std::size_t>(on), tol.pivot) !=
        static_cast<int>(d) - 1)
      continue;
    if (!seen.insert(on).second) continue;
    out.push_back({h, std::move(on)});
  }
  return out;
}

template <class T>
std::size_t facet_count(const HPolytope<T>& p, const Tolerances& tol = {}) {
  return facets(enumerate_vertices(p, tol), p.halfspaces().size(), tol).size();
}

namespace detail {

template <class T>
void triangulate_face(const VertexEnumeration<T>& e, std::size_t halfspace_count,
                      const std::vector<std::size_t>& face, int k, const Tolerances& tol,
                      std::vector<std::vector<std::size_t>>& simplices) {
  if (k == 0) {
    simplices.push_back({face.front()});
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t h = 0; h < halfspace_count; ++h) {
    std::vector<std::size_t> sub;
    bool has_apex = false;
    for (std::size_t v : face) {
      const auto& t = e.tight[v];
      if (std::find(t.begin(), t.end(), h) == t.end()) continue;
      if (v == apex) has_apex = true;
      sub.push_back(v);
    }
    if (has_apex || sub.empty()) continue;
    if (affine_dimension(e.polytope.vertices, std::span<const std::size_t>(sub), tol.pivot) != k - 1)
      continue;
    if (!seen.insert(sub).second) continue;
    std::vector<std::vector<std::size_t>> lower;
    triangulate_face(e, halfspace_count, sub, k - 1, tol, lower);
    for (auto& s : lower) {
      s.push_back(apex);
      simplices.push_back(std::move(s));
    }
  }
}

}  // namespace detail

// Fan triangulation: each simplex is a list of d+1 vertex indices.
template <class T>
std::vector<std::vector<std::size_t>> triangulate(const VertexEnumeration<T>& e,
                                                  std::size_t halfspace_count,
                                                  const Tolerances& tol = {}) {
  std::vector<std::vector<std::size_t>> simplices;
  if (e.status != EnumerationStatus::bounded) return simplices;
  const int d = static_cast<int>(e.polytope.dim);
  if (affine_dimension(e.polytope.vertices, tol.pivot) < d) return simplices;
  std::vector<std::size_t> all(e.polytope.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  detail::triangulate_face(e, halfspace_count, all, d, tol, simplices);
  return simplices;
}

template <class T>
T simplex_volume_of(const std::vector<std::vector<T>>& pts, const std::vector<std::size_t>& s) {
  const std::size_t d = pts[s[0]].size();
  BasicMatrix<T> m(d, d);
  const auto& base = pts[s[0]];
  for (std::size_t r = 1; r <= d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r - 1, c) = pts[s[r]][c] - base[c];
  T det = determinant(m);
  if (det < T(0)) det = -det;
  return det / detail::factorial<T>(d);
}

template <class T>
VolumeResult<T> volume_exact(const HPolytope<T>& p, const Tolerances& tol = {}) {
  VolumeResult<T> out;
  auto e = enumerate_vertices(p, tol);
  if (e.status == EnumerationStatus::unbounded)
    throw DomainError("volume of an unbounded polytope");
  if (e.status == EnumerationStatus::empty ||
      affine_dimension(e.polytope.vertices, tol.pivot) < static_cast<int>(p.dim())) {
    out.degenerate = true;
    return out;
  }
  for (const auto& s : triangulate(e, p.halfspaces().size(), tol))
    out.value += simplex_volume_of(e.polytope.vertices, s);
  return out;
}

// Bounding-box rejection estimate with its standard error.
inline VolumeResult<double> volume_monte_carlo(const HPolytope<double>& p, std::size_t samples,
                                               std::uint64_t seed, const Tolerances& tol = {}) {
  VolumeResult<double> out;
  out.monte_carlo = true;
  auto e = enumerate_vertices(p, tol);
  if (e.status == EnumerationStatus::unbounded)
    throw DomainError("volume of an unbounded polytope");
  if (e.status == EnumerationStatus::empty || samples == 0) {
    out.degenerate = true;
    return out;
  }
  const std::size_t d = p.dim();
  std::vector<double> lo(d, INFINITY), hi(d, -INFINITY);
  for (const auto& v : e.polytope.vertices)
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  double box = 1.0;
  for (std::size_t i = 0; i < d; ++i) box *= hi[i] - lo[i];
  if (box <= 0.0) {
    out.degenerate = true;
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(d);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < d; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * u(rng);
    if (p.contains(x, 0.0)) ++hits;
  }
  const double f = static_cast<double>(hits) / static_cast<double>(samples);
  out.value = box * f;
  out.std_error = box * std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
  return out;
}

template <class T>
std::pair<HPolytope<T>, HPolytope<T>> cut(const HPolytope<T>& p, const Halfspace<T>& plane) {
  HPolytope<T> below = p;
  below.add(plane);
  Halfspace<T> flipped{plane.normal, -plane.offset};
  for (auto& v : flipped.normal) v = -v;
  HPolytope<T> above = p;
  above.add(std::move(flipped));
  return {std::move(below), std::move(above)};
}

namespace detail {

// Normal to the hyperplane through d points in R^d by cofactor expansion
// of the (d-1) x d difference matrix.
template <class T>
std::vector<T> hyperplane_normal(const std::vector<std::vector<T>>& pts,
                                 const std::vector<std::size_t>& idx) {
  const std::size_t d = pts[idx[0]].size();
  std::vector<T> normal(d, T(0));
  if (d == 1) {
    normal[0] = T(1);
    return normal;
  }
  BasicMatrix<T> diff(d - 1, d);
  for (std::size_t r = 1; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) diff(r - 1, c) = pts[idx[r]][c] - pts[idx[0]][c];
  for (std::size_t skip = 0; skip < d; ++skip) {
    BasicMatrix<T> minor(d - 1, d - 1);
    for (std::size_t r = 0; r + 1 < d; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (c == skip) continue;
        minor(r, cc++) = diff(r, c);
      }
    }
    T m = determinant(minor);
    normal[skip] = (skip % 2 == 0) ? m : T(-m);
  }
  return normal;
}

}  // namespace detail

template <class T>
struct Hull {
  HPolytope<T> polytope;
  std::vector<std::vector<T>> points;  // deduplicated input
  std::vector<std::vector<std::size_t>> facet_points;
  bool full_dimensional = false;
};

// Convex hull of a point set as an H-polytope, one halfspace per facet.
template <class T>
Hull<T> hull_of_points(const std::vector<std::vector<T>>& input, const Tolerances& tol = {}) {
  Hull<T> out;
  if (input.empty()) return out;
  const std::size_t d = input.front().size();
  out.polytope = HPolytope<T>(d);
  out.points = detail::dedup_points(input, tol.geometric);
  if (affine_dimension(out.points, tol.pivot) < static_cast<int>(d)) return out;
  out.full_dimensional = true;
  std::set<std::vector<std::size_t>> seen;
  detail::for_each_subset(out.points.size(), d, [&](const std::vector<std::size_t>& idx) {
    auto normal = detail::hyperplane_normal(out.points, idx);
    T len2(0);
    for (const auto& v : normal) len2 += v * v;
    if (near_zero(len2, tol.pivot * tol.pivot)) return;
    if constexpr (!is_exact_v<T>) {
      const double len = std::sqrt(to_double(len2));
      for (auto& v : normal) v /= len;
    }
    T offset = dot(std::span<const T>(normal), std::span<const T>(out.points[idx[0]]));
    bool any_above = false, any_below = false;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < out.points.size(); ++i) {
      T v = dot(std::span<const T>(normal), std::span<const T>(out.points[i])) - offset;
      if (near_zero(v, tol.geometric))
        on.push_back(i);
      else if (v > T(0))
        any_above = true;
      else
        any_below = true;
      if (any_above && any_below) return;
    }
    if (!seen.insert(on).second) return;
    if (any_above) {
      for (auto& v : normal) v = -v;
      offset = -offset;
    }
    out.polytope.add({std::move(normal), offset});
    out.facet_points.push_back(std::move(on));
  });
  return out;
}

template <class T>
BasicMatrix<T> squared_distance_matrix(const std::vector<std::vector<T>>& pts) {
  BasicMatrix<T> d(pts.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      T v = squared_distance(std::span<const T>(pts[i]), std::span<const T>(pts[j]));
      d(i, j) = v;
      d(j, i) = v;
    }
  return d;
}

// Searches for a permutation pi with d1(i,j) = d2(pi(i), pi(j)) within tol.
// Candidates are pre-filtered by sorted row multisets.
template <class T>
std::optional<std::vector<std::size_t>> match_distance_matrices(const BasicMatrix<T>& d1,
                                                               const BasicMatrix<T>& d2,
                                                               double tol) {
  const std::size_t n = d1.rows();
  if (d2.rows() != n) return std::nullopt;
  auto sorted_row = [](const BasicMatrix<T>& d, std::size_t i) {
    auto r = d.row_vector(i);
    std::sort(r.begin(), r.end());
    return r;
  };
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto ri = sorted_row(d1, i);
    for (std::size_t j = 0; j < n; ++j)
      if (detail::same_point<T>(ri, sorted_row(d2, j), tol)) candidates[i].push_back(j);
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j : candidates[i]) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = near_zero(T(d1(i, k) - d2(j, perm[k])), tol);
      if (!ok) continue;
      perm[i] = j;
      used[j] = true;
      if (place(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return perm;
}

template <class T>
bool congruent(const VPolytope<T>& p, const VPolytope<T>& q, double tol) {
  if (p.vertices.size() != q.vertices.size() || p.dim != q.dim) return false;
  return match_distance_matrices(squared_distance_matrix(p.vertices),
                                 squared_distance_matrix(q.vertices), tol)
      .has_value();
}

}  // namespace hill
