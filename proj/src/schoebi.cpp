#include "hill/schoebi.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "hill/errors.hpp"
#include "hill/kernels.hpp"

namespace hill {

namespace {

// Constants of the unit-scale stage on P_k (w = 1/k).
struct StageConstants {
  ShiftMapParams params;
  double root_k = 1.0;
  double shrink = 1.0;  // sqrt(k^2 - 1)/k
};

StageConstants stage_constants(int k) {
  const double kd = k;
  const double r = std::sqrt(kd + 1.0);
  const double scale = std::pow(kd, -1.5);
  StageConstants c;
  c.params = ShiftMapParams(k, scale * (1.0 + (kd - 1.0) * r), scale * (1.0 - r));
  c.root_k = std::sqrt(kd);
  c.shrink = std::sqrt(kd * kd - 1.0) / kd;
  return c;
}

// lambda[k] is the accumulated scale on entry to the stage on P_k
// (k = 1 .. n-1); lambda[n-1] = sqrt((n-1)/n).
Vector stage_scales(int n) {
  Vector lambda(static_cast<std::size_t>(std::max(n, 1)), 1.0);
  if (n < 2) return lambda;
  lambda[static_cast<std::size_t>(n - 1)] = std::sqrt((n - 1.0) / n);
  for (int k = n - 1; k >= 2; --k) {
    const double kd = k;
    lambda[static_cast<std::size_t>(k - 1)] =
        lambda[static_cast<std::size_t>(k)] * std::sqrt(kd * kd - 1.0) / kd;
  }
  return lambda;
}

// Nearest point of O_n for x within tol of it: sort into descending order
// and clamp to [0, 1].
void project_orthoscheme(std::span<double> x) {
  for (auto& v : x) v = std::clamp(v, 0.0, 1.0);
  for (std::size_t i = 1; i < x.size(); ++i) x[i] = std::min(x[i], x[i - 1]);
}

void check_length(std::size_t got, int n, const char* what) {
  if (got != static_cast<std::size_t>(n))
    throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(n) +
                            ", got " + std::to_string(got));
}

}  // namespace

double PrismSpec::volume() const {
  return std::pow(cross_scale, n - 1) * simplex_volume(n - 1, 1.0 / (n - 1)) * length;
}

std::vector<Vector> PrismSpec::all_vertices() const {
  std::vector<Vector> out;
  const double top = length / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < base_vertices.rows(); ++i) out.push_back(base_vertices.row_vector(i));
  for (std::size_t i = 0; i < base_vertices.rows(); ++i) {
    auto v = base_vertices.row_vector(i);
    for (auto& c : v) c += top;
    out.push_back(std::move(v));
  }
  return out;
}

HPolytope<double> PrismSpec::halfspaces() const {
  const auto d = static_cast<std::size_t>(n);
  HPolytope<double> p(d);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    Vector h(d, 0.0);
    h[i + 1] = 1.0;
    h[i] = -1.0;
    p.add({std::move(h), 0.0});
  }
  Vector wrap(d, 0.0);
  wrap[0] = 1.0;
  wrap[d - 1] = -1.0;
  p.add({std::move(wrap), walls.a - walls.b});
  p.add({Vector(d, -1.0), 0.0});
  p.add({Vector(d, 1.0), walls.sum_step()});
  return p;
}

PrismSpec make_prism(int n, double w) {
  if (n < 2) throw InvalidDimension("prism needs n >= 2");
  PrismSpec p;
  p.n = n;
  p.w = w;
  p.walls = ShiftMapParams::for_simplex(n, w);
  const double nd = n;
  p.cross_scale = std::sqrt((nd - 1.0) * (w + 1.0) / nd);
  p.length = std::sqrt((1.0 - w * (nd - 1.0)) / nd);
  p.axis = Vector(static_cast<std::size_t>(n), 1.0 / std::sqrt(nd));
  // Vertex j of the cross-section: sqrt(w+1) times ((n-j)/n in the first j
  // slots, -j/n after), j = 0 .. n-1.
  const auto d = static_cast<std::size_t>(n);
  p.base_vertices = Matrix(d, d);
  const double s = std::sqrt(w + 1.0);
  for (std::size_t j = 1; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i)
      p.base_vertices(j, i) = s * (i < j ? (nd - j) / nd : -static_cast<double>(j) / nd);
  return p;
}

PrismSpec schoebi3d_prism(double w) {
  if (!(w > -1.0 && w < 0.5)) throw ParameterRange("schoebi3d_prism: need -1 < w < 1/2");
  PrismSpec p = make_prism(3, w);
  p.cross_scale = std::sqrt(2.0 * (w + 1.0) / 3.0);
  p.length = std::sqrt((1.0 - 2.0 * w) / 3.0);
  return p;
}

bool prism_walls_contains(const ShiftMapParams& params, std::span<const double> x, double tol) {
  check_length(x.size(), params.n, "prism_walls_contains");
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i + 1] > x[i] + tol) return false;
  return x.back() >= x.front() - (params.a - params.b) - tol;
}

int piece_index(double level, int pieces) {
  const double r = std::ceil(level) - 1.0;
  if (!(r > 0.0)) return 0;
  return r >= pieces - 1 ? pieces - 1 : static_cast<int>(r);
}

StageResult dissect_stage(const SimplexSpec& spec, std::span<const double> x, double tol) {
  check_length(x.size(), spec.n, "dissect_stage");
  if (!contains(spec, x, tol)) throw DomainError("dissect_stage: point outside Q_n(w)");
  StageResult out;
  out.piece = piece_index(coordinate_sum(x) / spec.apex_level(), spec.n);
  out.reassembled = phi(spec.shift_map(), x, -out.piece);
  return out;
}

StageResult dissect_stage(int n, double w, std::span<const double> x, double tol) {
  return dissect_stage(make_simplex(n, w), x, tol);
}

StepOutput step_A(std::span<const double> x, double tol) {
  const int n = static_cast<int>(x.size());
  if (n < 2) throw InvalidDimension("step_A needs n >= 2");
  if (!in_orthoscheme(x, tol)) throw DomainError("step_A: point outside O_n");
  Vector p(x.begin(), x.end());
  project_orthoscheme(p);
  const double s = coordinate_sum(p);
  StepOutput out;
  out.piece = piece_index(s, n);
  Vector moved(p.size());
  phi_into(ShiftMapParams(n, 1.0, 0.0), p, -out.piece, moved);
  out.y = (s - out.piece) / std::sqrt(static_cast<double>(n));
  out.next.assign(p.size() - 1, 0.0);
  apply_N(moved, out.next);
  return out;
}

StepOutput step_B(int k, std::span<const double> x, double tol) {
  if (k < 2) throw InvalidDimension("step_B needs k >= 2");
  check_length(x.size(), k, "step_B");
  if (!contains(make_simplex(k, 1.0 / k), x, tol)) throw DomainError("step_B: point outside P_k");
  const auto c = stage_constants(k);
  const double level = c.root_k * coordinate_sum(x);
  StepOutput out;
  out.piece = piece_index(level, k);
  Vector moved(x.size());
  phi_into(c.params, x, -out.piece, moved);
  out.y = (level - out.piece) / k;
  out.next.assign(x.size() - 1, 0.0);
  apply_N(moved, out.next);
  return out;
}

Vector brick_dimensions(int n) {
  if (n < 1) throw InvalidDimension("brick_dimensions needs n >= 1");
  if (n == 1) return {1.0};
  const auto lambda = stage_scales(n);
  Vector sides(static_cast<std::size_t>(n));
  sides[static_cast<std::size_t>(n - 1)] = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = n - 1; k >= 2; --k)
    sides[static_cast<std::size_t>(k - 1)] = lambda[static_cast<std::size_t>(k)] / k;
  sides[0] = lambda[1];
  return sides;
}

bool in_orthoscheme(std::span<const double> x, double tol) {
  if (x.empty()) return false;
  if (x.front() > 1.0 + tol || x.back() < -tol) return false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i + 1] > x[i] + tol) return false;
  return true;
}

bool in_brick(std::span<const double> y, double tol) {
  const auto sides = brick_dimensions(static_cast<int>(y.size()));
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!(y[i] >= -tol && y[i] <= sides[i] + tol)) return false;
  return true;
}

Vector theta(std::span<const double> x, double tol, BrickMap* trace, OpCounter* ops) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw InvalidDimension("theta needs n >= 1");
  if (!in_orthoscheme(x, tol)) throw DomainError("theta: point outside O_n");
  Vector cur(x.begin(), x.end());
  project_orthoscheme(cur);
  Vector y(cur.size());
  if (trace) {
    trace->n = n;
    trace->stage_indices.clear();
    trace->outputs.clear();
  }
  if (n == 1) {
    y[0] = cur[0];
    if (trace) trace->outputs.push_back(y[0]);
    return y;
  }

  Vector moved(cur.size()), next(cur.size());
  auto record = [&](int r, double v) {
    if (!trace) return;
    trace->stage_indices.push_back(r);
    trace->outputs.push_back(v);
  };

  // Stage A on O_n; the cross-section leaves at scale sqrt((n-1)/n) and is
  // renormalized to unit P_{n-1}.
  double s = coordinate_sum(cur);
  count_ops(ops, cur.size());
  int r = piece_index(s, n);
  phi_into(ShiftMapParams(n, 1.0, 0.0), cur, -r, moved, ops);
  y[static_cast<std::size_t>(n - 1)] = (s - r) / std::sqrt(static_cast<double>(n));
  record(r, y[static_cast<std::size_t>(n - 1)]);
  std::span<double> z(next.data(), cur.size() - 1);
  apply_N(moved, z, ops);
  double lambda = std::sqrt((n - 1.0) / n);
  for (auto& v : z) v /= lambda;
  count_ops(ops, z.size() + 4);
  std::copy(z.begin(), z.end(), cur.begin());

  for (int k = n - 1; k >= 2; --k) {
    const auto c = stage_constants(k);
    std::span<const double> in(cur.data(), static_cast<std::size_t>(k));
    const double level = c.root_k * coordinate_sum(in);
    r = piece_index(level, k);
    std::span<double> mv(moved.data(), static_cast<std::size_t>(k));
    phi_into(c.params, in, -r, mv, ops);
    y[static_cast<std::size_t>(k - 1)] = lambda * (level - r) / k;
    record(r, y[static_cast<std::size_t>(k - 1)]);
    std::span<double> out(next.data(), static_cast<std::size_t>(k - 1));
    apply_N(mv, out, ops);
    for (std::size_t i = 0; i < out.size(); ++i) cur[i] = out[i] / c.shrink;
    lambda *= c.shrink;
    count_ops(ops, static_cast<std::uint64_t>(2 * k) + 12);
  }
  y[0] = lambda * cur[0];
  count_ops(ops, 1);

  // Remove drift of a few ulps so the result lies in the closed brick.
  const auto sides = brick_dimensions(n);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::clamp(y[i], 0.0, sides[i]);
  if (trace) {
    // outputs are (y_n, ..., y_1); refresh from the clamped values.
    trace->outputs.push_back(y[0]);
    for (std::size_t i = 0; i < trace->outputs.size(); ++i)
      trace->outputs[i] = y[y.size() - 1 - i];
  }
  return y;
}

namespace {

// Shared inverse; `forced` supplies (r_n, ..., r_2) or is empty to recover
// each index by counting.
Vector theta_inverse_impl(std::span<const double> y_in, std::span<const int> forced, double tol,
                          BrickMap* trace) {
  const int n = static_cast<int>(y_in.size());
  if (n < 1) throw InvalidDimension("theta_inverse needs n >= 1");
  const auto sides = brick_dimensions(n);
  Vector y(y_in.begin(), y_in.end());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] >= -tol && y[i] <= sides[i] + tol))
      throw DomainError("theta_inverse: point outside the brick");
    y[i] = std::clamp(y[i], 0.0, sides[i]);
  }
  if (!forced.empty() && forced.size() != static_cast<std::size_t>(n - 1))
    throw DimensionMismatch("theta_inverse: need n-1 stage indices");
  if (n == 1) {
    if (trace) *trace = BrickMap{1, {}, {y[0]}};
    return y;
  }

  const auto lambda = stage_scales(n);
  std::vector<int> indices(static_cast<std::size_t>(n - 1), 0);
  Vector cur(y.size()), tmp(y.size());
  cur[0] = y[0] / lambda[1];

  // forced[j] belongs to stage n - j.
  auto forced_at = [&](int k) { return forced[static_cast<std::size_t>(n - k)]; };

  for (int k = 2; k <= n - 1; ++k) {
    const auto c = stage_constants(k);
    const auto ku = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i + 1 < ku; ++i) tmp[i] = cur[i] * c.shrink;
    std::span<double> xp(cur.data(), ku);
    apply_N_transpose(std::span<const double>(tmp.data(), ku - 1), xp);
    const double shift = (y[ku - 1] / lambda[ku]) / c.root_k;
    for (auto& v : xp) v += shift;
    int r;
    if (forced.empty()) {
      const double threshold = c.params.b * c.root_k * coordinate_sum(xp);
      r = static_cast<int>(std::count_if(xp.begin(), xp.end(),
                                         [&](double v) { return v < threshold; }));
      r = std::min(r, k - 1);
    } else {
      r = forced_at(k);
      if (r < 0 || r > k - 1) throw DomainError("theta_inverse: stage index out of range");
    }
    indices[static_cast<std::size_t>(n - k)] = r;
    std::copy(xp.begin(), xp.end(), tmp.begin());
    phi_into(c.params, std::span<const double>(tmp.data(), ku), r, xp);
  }

  const auto nu = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + 1 < nu; ++i) tmp[i] = cur[i] * lambda[nu - 1];
  Vector xp(nu);
  apply_N_transpose(std::span<const double>(tmp.data(), nu - 1), xp);
  const double shift = y[nu - 1] / std::sqrt(static_cast<double>(n));
  for (auto& v : xp) v += shift;
  int r;
  if (forced.empty()) {
    r = static_cast<int>(std::count_if(xp.begin(), xp.end(), [](double v) { return v < 0.0; }));
    r = std::min(r, n - 1);
  } else {
    r = forced_at(n);
    if (r < 0 || r > n - 1) throw DomainError("theta_inverse: stage index out of range");
  }
  indices[0] = r;
  Vector x(nu);
  phi_into(ShiftMapParams(n, 1.0, 0.0), xp, r, x);
  if (forced.empty()) project_orthoscheme(x);
  if (trace) {
    trace->n = n;
    trace->stage_indices = indices;
    trace->outputs.assign(y.rbegin(), y.rend());
  }
  return x;
}

}  // namespace

Vector theta_inverse(std::span<const double> y, double tol, BrickMap* trace) {
  return theta_inverse_impl(y, {}, tol, trace);
}

Vector theta_inverse_with_pieces(std::span<const double> y, std::span<const int> stage_indices,
                                 double tol) {
  if (y.size() > 1 && stage_indices.empty())
    throw DimensionMismatch("theta_inverse_with_pieces: need n-1 stage indices");
  return theta_inverse_impl(y, stage_indices, tol, nullptr);
}

TilingTrajectory build_tiling_window(int n, double w, long long i_min, long long i_max) {
  if (i_min >= i_max) throw ParameterRange("build_tiling_window: need i_min < i_max");
  TilingTrajectory t;
  t.params = ShiftMapParams::for_simplex(n, w);
  t.first = i_min;
  const Vector origin(static_cast<std::size_t>(n), 0.0);
  t.points.reserve(static_cast<std::size_t>(i_max - i_min + 1));
  for (long long i = i_min; i <= i_max; ++i) t.points.push_back(phi(t.params, origin, i));
  return t;
}

TilingWindowReport verify_tiling_window(const TilingTrajectory& traj, std::size_t samples,
                                        std::uint64_t seed) {
  const int n = traj.params.n;
  const auto spec = [&] {
    // Recover w from a, b: v_1·v_2 = 2ab + (n-2) b^2 = -w.
    const double a = traj.params.a, b = traj.params.b;
    return make_simplex(n, -(2.0 * a * b + (n - 2.0) * b * b));
  }();
  const auto reference = squared_distance_matrix(spec.all_vertices());
  const double volume = simplex_volume(n, spec.w);

  TilingWindowReport rep;
  const long long first = traj.first, last_start = traj.last() - n;
  for (long long i = first; i <= last_start; ++i) {
    std::vector<Vector> pts;
    for (int j = 0; j <= n; ++j) pts.push_back(traj.u(i + j));
    ++rep.simplices;
    if (max_abs_diff(squared_distance_matrix(pts), reference) > 1e-9)
      rep.successive_congruent = false;
    Matrix edges(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
      for (int c = 0; c < n; ++c)
        edges(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(c)) =
            pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] -
            pts[0][static_cast<std::size_t>(c)];
    double fact = 1.0;
    for (int j = 2; j <= n; ++j) fact *= j;
    rep.max_volume_error =
        std::max(rep.max_volume_error, std::abs(std::abs(determinant(edges)) / fact - volume));
    if (i + 1 <= last_start) {
      // Q^{(i)} and Q^{(i+1)} share u_{i+1}..u_{i+n}, which must span a facet
      // and be the image of the previous n points under phi.
      std::vector<Vector> face(pts.begin() + 1, pts.end());
      if (affine_dimension(face, 1e-11) != n - 1) rep.shared_faces = false;
      for (int j = 0; j < n; ++j)
        if (max_abs_diff(phi(traj.params, pts[static_cast<std::size_t>(j)], 1),
                         pts[static_cast<std::size_t>(j + 1)]) > 1e-12)
          rep.shared_faces = false;
    }
  }
  if (rep.simplices < 2 || samples == 0) return rep;

  // Sample interior points of Q^{(i)} for random i and test them against
  // every other window simplex: x in Q^{(j)} iff phi^{-j}(x) in Q_n(w).
  const auto base = sample(spec, samples, seed);
  std::mt19937_64 pick(seed ^ 0x5bd1e995ULL);
  std::uniform_int_distribution<long long> which(first, last_start);
  Vector p(static_cast<std::size_t>(n)), q(static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < base.size(); ++s) {
    if (!contains(spec, base.row(s), -1e-9)) continue;
    const long long i = which(pick);
    phi_into(traj.params, base.row(s), i, p);
    ++rep.samples;
    for (long long j = first; j <= last_start; ++j) {
      if (j == i) continue;
      phi_into(traj.params, p, -j, q);
      if (contains(spec, q, -1e-9)) ++rep.overlaps;
    }
  }
  return rep;
}

PrismTilingReport check_prism_tiling(int n, double w, std::size_t samples, std::uint64_t seed) {
  const auto spec = make_simplex(n, w);
  const auto prism = make_prism(n, w);
  const auto walls = prism.halfspaces();
  const auto params = spec.shift_map();
  PrismTilingReport rep;
  rep.n = n;
  rep.w = w;

  // Uniform points of the prism by rejection from its bounding box.
  const auto verts = prism.all_vertices();
  const auto d = static_cast<std::size_t>(n);
  Vector lo(d, INFINITY), hi(d, -INFINITY);
  for (const auto& v : verts)
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  auto rng = block_engine(seed, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vector x(d), q(d);
  constexpr double kMargin = 1e-9;
  while (rep.samples < samples) {
    for (std::size_t i = 0; i < d; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * u(rng);
    if (!walls.contains(x, 0.0)) continue;
    // Piece k sits in the prism as phi^{-k}(piece k), so x is covered by
    // piece k iff y = phi^{k}(x) lies in Q_n(w) with level in [k, k+1].
    int covered = 0;
    bool near_boundary = false;
    for (int k = 0; k < n; ++k) {
      phi_into(params, x, k, q);
      const auto lambda = order_coordinates(spec, q);
      double margin = std::min(1.0 - lambda.front(), lambda.back());
      for (std::size_t i = 0; i + 1 < d; ++i) margin = std::min(margin, lambda[i] - lambda[i + 1]);
      const double level = coordinate_sum(q) / spec.apex_level();
      margin = std::min({margin, level - k, k + 1 - level});
      if (std::abs(margin) < kMargin) near_boundary = true;
      if (margin > 0.0) ++covered;
    }
    if (near_boundary) {
      ++rep.resampled;
      continue;
    }
    ++rep.samples;
    if (covered == 0) ++rep.uncovered;
    if (covered > 1) ++rep.overlaps;
  }

  const auto pts = sample(spec, samples, seed + 1);
  for (std::size_t s = 0; s < pts.size(); ++s) {
    const auto st = dissect_stage(spec, pts.row(s));
    const double sum = coordinate_sum(st.reassembled);
    if (!prism_walls_contains(params, st.reassembled, 1e-9) || sum < -1e-9 ||
        sum > spec.apex_level() + 1e-9)
      ++rep.forward_failures;
  }
  return rep;
}

std::size_t count_pieces_recursive(int n, std::size_t samples, std::uint64_t seed) {
  if (n < 2) throw InvalidDimension("count_pieces_recursive needs n >= 2");
  const auto pts = sample(make_simplex(n, 0.0), samples, seed);
  std::set<std::vector<int>> seen;
  BrickMap trace;
  for (std::size_t s = 0; s < pts.size(); ++s) {
    (void)theta(pts.row(s), kDomainTolerance, &trace);
    seen.insert(trace.stage_indices);
  }
  return seen.size();
}

}  // namespace hill
