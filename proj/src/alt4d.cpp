#include "hill/alt4d.hpp"

#include <algorithm>

#include "hill/errors.hpp"
#include "hill/io.hpp"
#include "hill/simplex.hpp"

namespace hill::alt4d {

namespace {

Rational q(long long a, long long b = 1) { return Rational(a) / Rational(b); }

RVec vec(long long a, long long b, long long c, long long d, long long den) {
  return {q(a, den), q(b, den), q(c, den), q(d, den)};
}

RationalMatrix signed_permutation(std::initializer_list<std::tuple<int, int, int>> entries) {
  RationalMatrix m(4, 4, Rational(0));
  for (auto [i, j, v] : entries) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
  return m;
}

std::vector<RVec> vertices_of(const RPoly& p) {
  auto e = enumerate_vertices(p);
  if (e.status != EnumerationStatus::bounded) return {};
  return e.polytope.vertices;
}

Rational volume_of(const RPoly& p) { return volume_exact(p).value; }

bool full_dimensional(const RPoly& p) {
  const auto v = vertices_of(p);
  return !v.empty() && affine_dimension(v, 0.0) == 4;
}

bool interiors_disjoint(const std::vector<RPoly>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (full_dimensional(parts[i].intersect(parts[j]))) return false;
  return true;
}

bool contains_point(const std::vector<RVec>& set, const RVec& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

bool same_set(const std::vector<RVec>& a, const std::vector<RVec>& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const RVec& p) { return contains_point(b, p); });
}

std::vector<RVec> named(const Scene& s, const std::vector<std::string>& names) {
  std::vector<RVec> out;
  for (const auto& n : names) out.push_back(s.at(n));
  return out;
}

// Names of the points in `pts` (each must be a named point, else "?").
std::vector<std::string> name_points(const Scene& s, const std::vector<RVec>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) {
    std::string name = "?";
    for (const auto& [k, v] : s.points)
      if (v == p) name = k;
    out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool fixes_setwise(const RationalIsometry& g, const std::vector<RVec>& pts) {
  std::vector<RVec> moved;
  for (const auto& p : pts) moved.push_back(g.apply(p));
  return same_set(moved, pts);
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

RVec diff(const RVec& a, const RVec& b) {
  RVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

RVec lerp(const RVec& a, const RVec& b, const Rational& t) {
  RVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] + t * (b[i] - a[i]);
  return d;
}

std::vector<RVec> concat(std::initializer_list<std::vector<RVec>> parts) {
  std::vector<RVec> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const Halfspace<Rational> kThirdCut{{q(1), q(1), q(1), q(1)}, q(0)};

}  // namespace

Scene build_scene() {
  Scene s;
  auto& p = s.points;
  p["A"] = vec(-1, -1, -1, -1, 2);
  p["B"] = vec(1, -1, -1, -1, 2);
  p["C"] = vec(1, 1, -1, -1, 2);
  p["D"] = vec(1, 1, 1, -1, 2);
  p["E"] = vec(1, 1, 1, 1, 2);
  p["F"] = vec(0, 0, 0, -1, 2);
  p["G"] = vec(-1, -1, -1, -1, 6);
  p["H"] = vec(1, 0, 0, 0, 2);
  p["I"] = vec(1, 1, 1, 1, 6);
  p["J"] = vec(1, 1, 1, -5, 6);
  p["K"] = vec(5, -1, -1, -1, 6);
  p["L"] = vec(3, -1, -1, -1, 4);
  p["M"] = vec(0, 0, 0, 0, 1);
  p["N"] = vec(1, 1, 1, -3, 4);
  p["P"] = vec(-1, -1, -1, -1, 4);
  p["Q"] = vec(0, 0, 0, -1, 1);
  p["R"] = vec(1, 1, -3, -3, 4);

  // Row-vector maps: out_j = sum_i x_i m(i, j) + shift_j.
  s.alpha = RationalIsometry(signed_permutation({{2, 0, -1}, {1, 1, -1}, {0, 2, -1}, {3, 3, -1}}),
                             {q(0), q(0), q(0), q(-1)});
  s.beta = RationalIsometry(signed_permutation({{0, 0, -1}, {3, 1, -1}, {2, 2, -1}, {1, 3, -1}}),
                            {q(1), q(0), q(0), q(0)});
  s.gamma = RationalIsometry(signed_permutation({{1, 0, 1}, {2, 1, 1}, {3, 2, 1}, {0, 3, 1}}),
                             {q(0), q(0), q(0), q(-1)});

  s.tau = RPoly(4);
  s.tau.add({{q(1), q(0), q(0), q(0)}, q(1, 2)});
  s.tau.add({{q(-1), q(1), q(0), q(0)}, q(0)});
  s.tau.add({{q(0), q(-1), q(1), q(0)}, q(0)});
  s.tau.add({{q(0), q(0), q(-1), q(1)}, q(0)});
  s.tau.add({{q(0), q(0), q(0), q(-1)}, q(1, 2)});

  auto [t1, rest] = cut(s.tau, Halfspace<Rational>{{q(1), q(0), q(1), q(1)}, q(-1, 2)});
  auto [t2, t3] = cut(rest, Halfspace<Rational>{{q(1), q(1), q(0), q(1)}, q(1, 2)});
  s.tau1 = std::move(t1);
  s.tau2 = std::move(t2);
  s.tau3 = std::move(t3);
  s.tau1_moved = s.tau1.image(s.alpha);
  s.tau3_moved = s.tau3.image(s.beta);
  s.tau4 = hull_of_points(
      concat({vertices_of(s.tau1_moved), vertices_of(s.tau2), vertices_of(s.tau3_moved)}));

  auto [t5, t6] = cut(s.tau4.polytope, kThirdCut);
  s.tau5 = std::move(t5);
  s.tau6 = std::move(t6);
  s.tau6_moved = s.tau6.image(s.gamma);
  s.tau7 = hull_of_points(concat({vertices_of(s.tau5), vertices_of(s.tau6_moved)}));

  const auto id = RationalIsometry::identity(4);
  const std::vector<std::tuple<std::string, const RPoly*, RationalIsometry>> parts{
      {"tau1", &s.tau1, s.alpha}, {"tau2", &s.tau2, id}, {"tau3", &s.tau3, s.beta}};
  for (const auto& [name, src, g] : parts) {
    const auto moved = src->image(g);
    auto [lower, upper] = cut(moved, kThirdCut);
    const auto back = g.inverse();
    if (full_dimensional(lower))
      s.pieces.push_back({name + "-", lower.image(back), g, lower, volume_of(lower)});
    if (full_dimensional(upper)) {
      auto placed = upper.image(s.gamma);
      s.pieces.push_back({name + "+", upper.image(back), g.then(s.gamma), placed, volume_of(placed)});
    }
  }
  return s;
}

bool SceneReport::passed() const {
  return named_points && parallel_edges && alpha_fixes_bcf && beta_fixes_cdh && tau_symmetric &&
         std::abs(alpha_det) == 1 && std::abs(beta_det) == 1 && std::abs(gamma_det) == 1;
}

bool Tau4Report::passed() const {
  return vertices_match && vertex_count == 7 && facet_count == 6 && volume == q(1, 24) &&
         parts_volume == volume && parts_disjoint;
}

bool Tau7Report::passed() const {
  return vertices_match && vertex_count == 8 && volume == q(1, 24) && volumes_conserved &&
         positions && bases_congruent && prism_congruent && final_pieces == 6 && pieces_tile;
}

SceneReport verify_scene(const Scene& s) {
  SceneReport r;
  const auto v1 = vertices_of(s.tau1), v2 = vertices_of(s.tau2), v3 = vertices_of(s.tau3);
  // G lies on the first cut and F on both; H and I on the second.
  r.named_points = contains_point(v1, s.at("G")) && contains_point(v1, s.at("F")) &&
                   contains_point(v2, s.at("F")) && contains_point(v3, s.at("H")) &&
                   contains_point(v3, s.at("I"));
  const RVec third{q(1, 3), q(1, 3), q(1, 3), q(1, 3)};
  r.parallel_edges = diff(s.at("K"), s.at("B")) == third && diff(s.at("I"), s.at("G")) == third &&
                     diff(s.at("D"), s.at("J")) == third;
  r.alpha_fixes_bcf = fixes_setwise(s.alpha, named(s, {"B", "C", "F"}));
  r.beta_fixes_cdh = fixes_setwise(s.beta, named(s, {"C", "D", "H"}));
  const RationalIsometry flip(
      signed_permutation({{3, 0, -1}, {2, 1, -1}, {1, 2, -1}, {0, 3, -1}}),
      {q(0), q(0), q(0), q(0)});
  r.tau_symmetric = fixes_setwise(flip, vertices_of(s.tau));
  r.alpha_det = sign_of(s.alpha.determinant());
  r.beta_det = sign_of(s.beta.determinant());
  r.gamma_det = sign_of(s.gamma.determinant());
  return r;
}

Tau4Report verify_tau4(const Scene& s) {
  Tau4Report r;
  const auto verts = vertices_of(s.tau4.polytope);
  r.vertex_count = verts.size();
  r.vertex_names = name_points(s, verts);
  r.vertices_match = same_set(verts, named(s, {"B", "C", "D", "G", "I", "J", "K"}));
  r.facet_count = s.tau4.polytope.halfspaces().size();
  r.volume = volume_of(s.tau4.polytope);
  r.parts_volume = volume_of(s.tau1) + volume_of(s.tau2) + volume_of(s.tau3);
  r.parts_disjoint = interiors_disjoint({s.tau1_moved, s.tau2, s.tau3_moved});
  return r;
}

BasicMatrix<Rational> prism_squared_distances() {
  BasicMatrix<Rational> d(8, 8, Rational(0));
  const Rational w = q(1, 3), scale = q(3, 4), height = q(1, 4);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      if (i == j) continue;
      d(i, j) = scale * hill_squared_distance<Rational>(i % 4, j % 4, w) +
                ((i < 4) != (j < 4) ? height : Rational(0));
    }
  return d;
}

Tau7Report verify_tau7(const Scene& s) {
  Tau7Report r;
  const auto verts = vertices_of(s.tau7.polytope);
  r.vertex_count = verts.size();
  r.vertex_names = name_points(s, verts);
  r.vertices_match = same_set(verts, named(s, {"C", "L", "M", "N", "R", "B", "P", "Q"}));
  r.volume = volume_of(s.tau7.polytope);
  const Rational v123 = volume_of(s.tau1) + volume_of(s.tau2) + volume_of(s.tau3);
  const Rational v56 = volume_of(s.tau5) + volume_of(s.tau6);
  const Rational v4 = volume_of(s.tau4.polytope);
  r.volumes_conserved = volume_of(s.tau) == q(1, 24) && v123 == q(1, 24) && v4 == q(1, 24) &&
                        v56 == q(1, 24) && r.volume == q(1, 24);

  r.positions = s.at("L") == lerp(s.at("B"), s.at("K"), q(3, 4)) &&
                s.at("M") == lerp(s.at("G"), s.at("I"), q(1, 2)) &&
                s.at("N") == lerp(s.at("J"), s.at("D"), q(1, 4));

  BasicMatrix<Rational> base(4, 4, Rational(0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      base(i, j) = q(3, 4) * hill_squared_distance<Rational>(i, j, q(1, 3));
  r.bases_congruent =
      match_distance_matrices(squared_distance_matrix(named(s, {"C", "L", "M", "N"})), base, 0.0)
          .has_value() &&
      match_distance_matrices(squared_distance_matrix(named(s, {"R", "B", "P", "Q"})), base, 0.0)
          .has_value();
  r.prism_congruent =
      verts.size() == 8 &&
      match_distance_matrices(squared_distance_matrix(verts), prism_squared_distances(), 0.0)
          .has_value();

  r.final_pieces = s.pieces.size();
  Rational total(0);
  std::vector<RPoly> placed;
  for (const auto& p : s.pieces) {
    total += p.volume;
    placed.push_back(p.placed);
  }
  r.pieces_tile = total == q(1, 24) && interiors_disjoint(placed);
  return r;
}

nlohmann::json scene_json(const Scene& s) {
  nlohmann::json j;
  auto pieces = nlohmann::json::array();
  for (const auto& p : s.pieces) {
    nlohmann::json pj;
    pj["name"] = p.name;
    pj["volume"] = p.volume.str();
    pj["source"] = io::polytope_json(p.source);
    pj["placed"] = io::polytope_json(p.placed);
    pieces.push_back(pj);
  }
  j["pieces"] = pieces;
  j["tau7"] = io::polytope_json(s.tau7.polytope);
  j["tau4"] = io::polytope_json(s.tau4.polytope);
  return j;
}

nlohmann::json report_json(const SceneReport& a, const Tau4Report& b, const Tau7Report& c) {
  return {{"scene",
           {{"named_points", a.named_points},
            {"parallel_edges", a.parallel_edges},
            {"alpha_fixes_BCF", a.alpha_fixes_bcf},
            {"beta_fixes_CDH", a.beta_fixes_cdh},
            {"tau_symmetric", a.tau_symmetric},
            {"det", {a.alpha_det, a.beta_det, a.gamma_det}},
            {"passed", a.passed()}}},
          {"tau4",
           {{"vertices", b.vertex_names},
            {"vertex_count", b.vertex_count},
            {"facet_count", b.facet_count},
            {"volume", b.volume.str()},
            {"parts_volume", b.parts_volume.str()},
            {"parts_disjoint", b.parts_disjoint},
            {"passed", b.passed()}}},
          {"tau7",
           {{"vertices", c.vertex_names},
            {"vertex_count", c.vertex_count},
            {"volume", c.volume.str()},
            {"volumes_conserved", c.volumes_conserved},
            {"positions", c.positions},
            {"bases_congruent", c.bases_congruent},
            {"prism_congruent", c.prism_congruent},
            {"final_pieces", c.final_pieces},
            {"pieces_tile", c.pieces_tile},
            {"passed", c.passed()}}}};
}

}  // namespace hill::alt4d
