#include "hill/two_tile.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "hill/errors.hpp"
#include "hill/points.hpp"

namespace hill {

namespace {

constexpr double kBoundaryTol = 1e-9;

std::vector<long long> element_key(const Isometry& g) {
  std::vector<long long> key;
  const auto& m = g.linear();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) key.push_back(std::llround(m(i, j) * 1e7));
  for (double v : g.shift()) key.push_back(std::llround(v * 1e7));
  return key;
}

struct Box {
  Vector lo, hi;

  bool overlaps(const Box& o, double pad) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (hi[i] < o.lo[i] - pad || o.hi[i] < lo[i] - pad) return false;
    return true;
  }
};

Box box_of(const std::vector<Vector>& pts) {
  const std::size_t d = pts.front().size();
  Box b{Vector(d, INFINITY), Vector(d, -INFINITY)};
  for (const auto& p : pts)
    for (std::size_t i = 0; i < d; ++i) {
      b.lo[i] = std::min(b.lo[i], p[i]);
      b.hi[i] = std::max(b.hi[i], p[i]);
    }
  return b;
}

std::vector<Vector> tile_vertices(const HPolytope<double>& p) {
  auto e = enumerate_vertices(p);
  if (e.status != EnumerationStatus::bounded) throw ConfigError("tile must be a bounded polytope");
  return e.polytope.vertices;
}

struct TileImage {
  HPolytope<double> poly;
  Box box;
  std::size_t element = 0;
};

std::vector<TileImage> images_near(const HPolytope<double>& tile,
                                   const std::vector<Isometry>& elements, const Box& window) {
  const auto verts = tile_vertices(tile);
  std::vector<TileImage> out;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    std::vector<Vector> moved;
    for (const auto& v : verts) moved.push_back(elements[k].apply(v));
    auto b = box_of(moved);
    if (!b.overlaps(window, 1e-9)) continue;
    out.push_back({tile.image(elements[k]), std::move(b), k});
  }
  return out;
}

// 1 inside, 0 outside, -1 within tol of the boundary.
int classify(const HPolytope<double>& p, std::span<const double> x) {
  const double v = p.max_violation(x);
  if (v < -kBoundaryTol) return 1;
  if (v > kBoundaryTol) return 0;
  return -1;
}

struct BlockTally {
  std::size_t samples = 0, resampled = 0;
  CoverTally a, b;
};

std::vector<TilePiece> pieces_of(const HPolytope<double>& tile, const HPolytope<double>& other,
                                 const std::vector<Isometry>& elements, std::uint64_t seed) {
  const auto verts = tile_vertices(tile);
  const auto images = images_near(other, elements, box_of(verts));
  std::vector<TilePiece> out;
  for (const auto& im : images) {
    auto piece = tile.intersect(im.poly);
    auto e = enumerate_vertices(piece);
    if (e.status != EnumerationStatus::bounded) continue;
    if (affine_dimension(e.polytope.vertices, 1e-11) < static_cast<int>(tile.dim())) continue;
    const auto vol = volume_exact(piece);
    if (vol.degenerate || vol.value < 1e-12) continue;
    TilePiece tp;
    tp.element = im.element;
    tp.g = elements[im.element];
    tp.vertices = e.polytope.vertices;
    tp.volume = vol.value;
    const auto mc = volume_monte_carlo(piece, 20000, seed + im.element);
    tp.mc_volume = mc.value;
    tp.mc_error = mc.std_error;
    out.push_back(std::move(tp));
  }
  return out;
}

Isometry isometry_from_json(const nlohmann::json& j) {
  const auto rows = j.at("matrix").get<std::vector<std::vector<double>>>();
  return Isometry(Matrix::from_rows(rows), j.at("shift").get<Vector>());
}

HPolytope<double> halfspaces_from_json(const nlohmann::json& j, std::size_t dim) {
  HPolytope<double> p(dim);
  for (const auto& h : j) p.add({h.at("normal").get<Vector>(), h.at("offset").get<double>()});
  return p;
}

nlohmann::json pieces_json(const std::vector<TilePiece>& pieces) {
  auto arr = nlohmann::json::array();
  for (const auto& p : pieces)
    arr.push_back({{"element", p.element},
                   {"vertices", p.vertices},
                   {"volume", p.volume},
                   {"mc_volume", p.mc_volume},
                   {"mc_std_error", p.mc_error}});
  return arr;
}

}  // namespace

std::vector<Isometry> GroupSpec::elements(std::size_t bound, double tol) const {
  if (generators.empty()) throw ConfigError("group needs at least one generator");
  const std::size_t d = generators.front().dim();
  std::vector<Isometry> gens;
  for (const auto& g : generators) {
    if (g.dim() != d) throw DimensionMismatch("group generators differ in dimension");
    gens.push_back(g);
    if (!g.inverse().equals(g, tol)) gens.push_back(g.inverse());
  }
  std::vector<Isometry> out{Isometry::identity(d)};
  std::set<std::vector<long long>> seen{element_key(out.front())};
  std::deque<std::size_t> queue{0};
  while (!queue.empty() && out.size() < bound) {
    const auto cur = out[queue.front()];
    queue.pop_front();
    for (const auto& g : gens) {
      auto next = cur.then(g);
      if (!seen.insert(element_key(next)).second) continue;
      out.push_back(std::move(next));
      queue.push_back(out.size() - 1);
      if (out.size() >= bound) break;
    }
  }
  return out;
}

bool Omega::contains(std::span<const double> x, double tol) const {
  return region.halfspaces().empty() || region.contains(x, tol);
}

Omega Omega::window(Vector lo, Vector hi) {
  Omega o;
  o.type = Type::window;
  const std::size_t d = lo.size();
  o.region = HPolytope<double>(d);
  for (std::size_t i = 0; i < d; ++i) {
    Vector up(d, 0.0), down(d, 0.0);
    up[i] = 1.0;
    down[i] = -1.0;
    o.region.add({up, hi[i]});
    o.region.add({down, -lo[i]});
  }
  o.lo = std::move(lo);
  o.hi = std::move(hi);
  return o;
}

Omega Omega::strip(HPolytope<double> region, Vector lo, Vector hi) {
  Omega o;
  o.type = Type::strip;
  o.region = std::move(region);
  o.lo = std::move(lo);
  o.hi = std::move(hi);
  return o;
}

Omega Omega::all(Vector lo, Vector hi) {
  Omega o;
  o.type = Type::all;
  o.region = HPolytope<double>(lo.size());
  o.lo = std::move(lo);
  o.hi = std::move(hi);
  return o;
}

TwoTileReport check_two_tile(const TwoTileInstance& inst, std::size_t samples,
                             std::uint64_t seed) {
  const std::size_t d = inst.tile_a.dim();
  if (inst.tile_b.dim() != d) throw DimensionMismatch("tiles differ in dimension");
  if (inst.omega.lo.size() != d || inst.omega.hi.size() != d)
    throw ConfigError("Omega needs a sampling window of the tile dimension");
  for (std::size_t i = 0; i < d; ++i)
    if (!(inst.omega.hi[i] > inst.omega.lo[i])) throw ConfigError("empty sampling window");

  TwoTileReport rep;
  rep.name = inst.name;
  rep.volume_a = volume_exact(inst.tile_a).value;
  rep.volume_b = volume_exact(inst.tile_b).value;
  rep.volume_mismatch = std::abs(rep.volume_a - rep.volume_b) > 1e-9;

  const auto elements = inst.group.elements(inst.element_bound);
  rep.elements = elements.size();
  const Box window{inst.omega.lo, inst.omega.hi};
  const auto images_a = images_near(inst.tile_a, elements, window);
  const auto images_b = images_near(inst.tile_b, elements, window);

  const auto blocks = static_cast<std::int64_t>(block_count(samples));
  std::vector<BlockTally> tallies(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    auto rng = block_engine(seed, static_cast<std::uint64_t>(blk));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto& t = tallies[static_cast<std::size_t>(blk)];
    const std::size_t want =
        std::min(kSampleBlock, samples - static_cast<std::size_t>(blk) * kSampleBlock);
    Vector x(d);
    while (t.samples < want) {
      for (std::size_t i = 0; i < d; ++i)
        x[i] = window.lo[i] + (window.hi[i] - window.lo[i]) * u(rng);
      if (!inst.omega.contains(x, 0.0)) continue;
      bool boundary = false;
      auto count = [&](const std::vector<TileImage>& images) {
        std::size_t c = 0;
        for (const auto& im : images) {
          const int k = classify(im.poly, x);
          if (k < 0) boundary = true;
          c += k > 0 ? 1 : 0;
        }
        return c;
      };
      const auto ca = count(images_a);
      const auto cb = count(images_b);
      if (boundary) {
        ++t.resampled;
        continue;
      }
      ++t.samples;
      if (ca == 0) ++t.a.uncovered;
      if (ca > 1) ++t.a.overlaps;
      if (cb == 0) ++t.b.uncovered;
      if (cb > 1) ++t.b.overlaps;
    }
  }
  for (const auto& t : tallies) {
    rep.samples += t.samples;
    rep.resampled += t.resampled;
    rep.cover_a.uncovered += t.a.uncovered;
    rep.cover_a.overlaps += t.a.overlaps;
    rep.cover_b.uncovered += t.b.uncovered;
    rep.cover_b.overlaps += t.b.overlaps;
  }

  rep.pieces_a = pieces_of(inst.tile_a, inst.tile_b, elements, seed + 1000);
  rep.pieces_b = pieces_of(inst.tile_b, inst.tile_a, elements, seed + 2000);
  std::vector<double> va, vb;
  for (const auto& p : rep.pieces_a) va.push_back(p.volume);
  for (const auto& p : rep.pieces_b) vb.push_back(p.volume);
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  rep.piece_volumes_match = !va.empty() && va.size() == vb.size();
  for (std::size_t i = 0; rep.piece_volumes_match && i < va.size(); ++i)
    if (std::abs(va[i] - vb[i]) > 1e-6 * std::max(va[i], vb[i])) rep.piece_volumes_match = false;
  return rep;
}

nlohmann::json TwoTileReport::to_json() const {
  return {{"name", name},
          {"volume_a", volume_a},
          {"volume_b", volume_b},
          {"volume_mismatch", volume_mismatch},
          {"group_elements", elements},
          {"samples", samples},
          {"resampled", resampled},
          {"cover_a", {{"uncovered", cover_a.uncovered}, {"overlaps", cover_a.overlaps}}},
          {"cover_b", {{"uncovered", cover_b.uncovered}, {"overlaps", cover_b.overlaps}}},
          {"pieces_a", pieces_json(pieces_a)},
          {"pieces_b", pieces_json(pieces_b)},
          {"piece_volumes_match", piece_volumes_match},
          {"passed", passed()}};
}

HPolytope<double> polygon_halfspaces(const std::vector<Vector>& vertices) {
  if (vertices.size() < 3) throw DomainError("polygon needs at least 3 vertices");
  double area2 = 0.0;
  const std::size_t m = vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = vertices[i];
    const auto& q = vertices[(i + 1) % m];
    area2 += p[0] * q[1] - q[0] * p[1];
  }
  HPolytope<double> out(2);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = vertices[i];
    const auto& q = vertices[(i + 1) % m];
    Vector nrm{q[1] - p[1], p[0] - q[0]};
    if (area2 < 0) nrm = {-nrm[0], -nrm[1]};
    const double len = std::hypot(nrm[0], nrm[1]);
    nrm[0] /= len;
    nrm[1] /= len;
    out.add({nrm, nrm[0] * p[0] + nrm[1] * p[1]});
  }
  return out;
}

TwoTileInstance example_square() {
  TwoTileInstance inst;
  inst.name = "triangle-rectangle-square";
  inst.omega = Omega::window({0.0, 0.0}, {1.0, 1.0});
  inst.group.kind = GroupSpec::Kind::finite;
  inst.group.generators = {Isometry(Matrix{{-1.0, 0.0}, {0.0, -1.0}}, {1.0, 1.0})};
  inst.tile_a = polygon_halfspaces({{0, 0}, {1, 0}, {1, 1}});
  inst.tile_b = polygon_halfspaces({{0, 0}, {0.5, 0}, {0.5, 1}, {0, 1}});
  inst.element_bound = 4;
  return inst;
}

TwoTileInstance example_strip() {
  TwoTileInstance inst;
  inst.name = "triangle-square-strip";
  HPolytope<double> strip(2);
  strip.add({{-1.0, 1.0}, 0.0});  // y <= x
  strip.add({{1.0, -1.0}, 1.0});  // y >= x - 1
  inst.omega = Omega::strip(std::move(strip), {-3.0, -3.0}, {3.0, 3.0});
  inst.group.kind = GroupSpec::Kind::cyclic_infinite;
  // (x, y) -> (y + 1, x) as a row-vector map.
  inst.group.generators = {Isometry(Matrix{{0.0, 1.0}, {1.0, 0.0}}, {1.0, 0.0})};
  inst.tile_a = polygon_halfspaces({{0, 0}, {1, 0}, {1, 1}});
  inst.tile_b = polygon_halfspaces({{0, 0}, {0.5, -0.5}, {1, 0}, {0.5, 0.5}});
  inst.element_bound = 41;
  return inst;
}

TwoTileInstance load_instance(const nlohmann::json& j) {
  try {
    TwoTileInstance inst;
    const auto dim = j.at("dimension").get<std::size_t>();
    inst.name = j.value("name", std::string("instance"));
    inst.tile_a = halfspaces_from_json(j.at("tile_a"), dim);
    inst.tile_b = halfspaces_from_json(j.at("tile_b"), dim);
    const auto& g = j.at("group");
    const auto kind = g.value("kind", std::string("finite"));
    if (kind == "finite")
      inst.group.kind = GroupSpec::Kind::finite;
    else if (kind == "cyclic-infinite")
      inst.group.kind = GroupSpec::Kind::cyclic_infinite;
    else if (kind == "crystallographic")
      inst.group.kind = GroupSpec::Kind::crystallographic;
    else
      throw ConfigError("unknown group kind '" + kind + "'");
    for (const auto& gen : g.at("generators")) inst.group.generators.push_back(isometry_from_json(gen));
    if (inst.group.kind == GroupSpec::Kind::crystallographic) {
      std::vector<Vector> translations;
      for (const auto& gen : inst.group.generators)
        if (max_abs_diff(gen.linear(), Matrix::identity(dim)) < 1e-12)
          translations.push_back(gen.shift());
      if (translations.size() != dim ||
          rank(Matrix::from_rows(translations)) != dim)
        throw ConfigError("crystallographic group needs a nonsingular translation basis");
    }
    inst.element_bound = j.value("element_bound", std::size_t{64});

    const auto& om = j.at("omega");
    const auto type = om.at("type").get<std::string>();
    const auto& params = om.at("params");
    if (!params.contains("lo") || !params.contains("hi"))
      throw ConfigError("omega needs a sampling window (params.lo, params.hi)");
    auto lo = params.at("lo").get<Vector>();
    auto hi = params.at("hi").get<Vector>();
    if (type == "window")
      inst.omega = Omega::window(std::move(lo), std::move(hi));
    else if (type == "strip")
      inst.omega =
          Omega::strip(halfspaces_from_json(params.at("halfspaces"), dim), std::move(lo), std::move(hi));
    else if (type == "all")
      inst.omega = Omega::all(std::move(lo), std::move(hi));
    else
      throw ConfigError("unknown omega type '" + type + "'");
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("instance: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("instance: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Dudeney

namespace {

double angle_at(const Vector& vertex, const Vector& p, const Vector& q) {
  const double ux = p[0] - vertex[0], uy = p[1] - vertex[1];
  const double vx = q[0] - vertex[0], vy = q[1] - vertex[1];
  const double c = (ux * vx + uy * vy) / (std::hypot(ux, uy) * std::hypot(vx, vy));
  return std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / std::numbers::pi;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& named_pieces() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> v{
      {"OBJG", {"O", "B", "J", "G"}},
      {"ODHB", {"O", "D", "H", "B"}},
      {"HEI", {"H", "E", "I"}},
      {"BIFJ", {"B", "I", "F", "J"}}};
  return v;
}

bool same_vertex_set(const std::vector<Vector>& a, const std::vector<Vector>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    bool hit = false;
    for (const auto& q : b)
      if (max_abs_diff(p, q) <= tol) hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

double DudeneyConstants::angle_clg_degrees() const { return angle_at(at("L"), at("C"), at("G")); }

double DudeneyConstants::lattice_angle_degrees() const {
  return angle_at(at("O"), at("H"), at("J"));
}

double DudeneyConstants::lattice_angle_acute_degrees() const {
  const double a = lattice_angle_degrees();
  return std::min(a, 180.0 - a);
}

DudeneyConstants dudeney_build() {
  DudeneyConstants c;
  c.c1 = std::sqrt(3.0) / 4.0;
  c.c2 = std::sqrt(c.c1);
  c.c3 = c.c2 * std::sqrt(1.0 - c.c1);
  const double c1 = c.c1, c3 = c.c3;
  auto& p = c.points;
  p["O"] = {0.0, 0.0};
  p["A"] = {-0.25, -c1};
  p["B"] = {0.25, c1};
  p["C"] = {0.75, -c1};
  p["D"] = {-c1 / 2.0, c3 / 2.0};
  p["E"] = {c3 - c1 / 2.0, c3 / 2.0 + c1};
  p["F"] = {c3 + c1 / 2.0, -c3 / 2.0 + c1};
  p["G"] = {c1 / 2.0, -c3 / 2.0};
  p["H"] = {c3 - 0.5, c1};
  p["L"] = {0.5 - c3, -c1};
  p["I"] = {c3, c1};
  p["J"] = {0.5, 0.0};
  p["K"] = {1.0 - c3 - c1 / 2.0, c3 / 2.0 - c1};
  p["P"] = {1.0 - 2.0 * c3, -2.0 * c1};
  return c;
}

TwoTileInstance dudeney_instance(const DudeneyConstants& c) {
  TwoTileInstance inst;
  inst.name = "dudeney";
  inst.omega = Omega::all({-1.5, -1.5}, {1.5, 1.5});
  inst.group.kind = GroupSpec::Kind::crystallographic;
  inst.group.generators = {Isometry::translation({1.0, 0.0}), Isometry::translation(c.at("P")),
                           Isometry(Matrix{{-1.0, 0.0}, {0.0, -1.0}}, {0.0, 0.0})};
  inst.tile_a = polygon_halfspaces({c.at("D"), c.at("E"), c.at("F"), c.at("G")});
  inst.tile_b = polygon_halfspaces({c.at("A"), c.at("B"), c.at("C")});
  inst.element_bound = 600;
  return inst;
}

bool DudeneyReport::passed() const {
  return two_tile.passed() && exact_piece_set && mapped_inside;
}

DudeneyReport dudeney_check(const DudeneyConstants& c, std::size_t samples, std::uint64_t seed) {
  DudeneyReport rep;
  const auto inst = dudeney_instance(c);
  rep.two_tile = check_two_tile(inst, samples, seed);

  std::vector<int> hits(named_pieces().size(), 0);
  bool stray = false;
  for (const auto& piece : rep.two_tile.pieces_a) {
    rep.area_sum += piece.volume;
    bool found = false;
    for (std::size_t k = 0; k < named_pieces().size(); ++k) {
      std::vector<Vector> target;
      for (const auto& name : named_pieces()[k].second) target.push_back(c.at(name));
      if (same_vertex_set(detail::dedup_points(piece.vertices, 1e-9), target, 1e-9)) {
        ++hits[k];
        rep.matched.push_back(named_pieces()[k].first);
        found = true;
      }
    }
    if (!found) stray = true;
  }
  rep.exact_piece_set = !stray && rep.two_tile.pieces_a.size() == named_pieces().size() &&
                        std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });

  // Triangle pieces carried back by g^{-1} must land in the square.
  rep.mapped_inside = !rep.two_tile.pieces_b.empty();
  for (const auto& piece : rep.two_tile.pieces_b) {
    rep.mapped_area_sum += piece.volume;
    const auto back = piece.g.inverse();
    for (const auto& v : piece.vertices)
      if (!inst.tile_a.contains(back.apply(v), 1e-9)) rep.mapped_inside = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// D_n

IntPoint dn_decode(std::span<const double> x) {
  if (x.size() < 3) throw InvalidDimension("dn_decode needs n >= 3");
  IntPoint f(x.size());
  long long sum = 0;
  std::size_t worst = 0;
  double worst_err = -1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    f[i] = static_cast<long long>(std::floor(x[i] + 0.5));
    sum += f[i];
    const double e = std::abs(x[i] - static_cast<double>(f[i]));
    if (e > worst_err) {
      worst_err = e;
      worst = i;
    }
  }
  if (sum % 2 != 0) f[worst] += x[worst] >= static_cast<double>(f[worst]) ? 1 : -1;
  return f;
}

BrickReduction dn_voronoi_to_brick(std::span<const double> x, double tol) {
  const auto lam = dn_decode(x);
  double to_origin = 0.0, to_lattice = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    to_origin += x[i] * x[i];
    const double e = x[i] - static_cast<double>(lam[i]);
    to_lattice += e * e;
  }
  if (to_origin > to_lattice + tol) throw DomainError("dn_voronoi_to_brick: point outside the cell");

  BrickReduction r;
  r.offset.assign(x.size(), 0);
  long long shift = 0;
  for (std::size_t j = 1; j < x.size(); ++j) {
    r.offset[j] = static_cast<long long>(std::floor(x[j] + 0.5));
    shift += r.offset[j];
  }
  const double first = x[0] + static_cast<double>(shift);
  r.offset[0] = 2 * static_cast<long long>(std::floor(first / 2.0)) - shift;
  r.y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r.y[i] = x[i] - static_cast<double>(r.offset[i]);
  return r;
}

Vector dn_brick_to_voronoi(std::span<const double> y) {
  const auto lam = dn_decode(y);
  Vector x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = y[i] - static_cast<double>(lam[i]);
  return x;
}

namespace {

DnCensus census_block(int n, std::size_t want, std::uint64_t seed, std::size_t block,
                      bool keep_points) {
  DnCensus c;
  auto rng = block_engine(seed, block);
  // Coordinates on the grid 2^-50 Z, so x - offset and y + offset are exact.
  constexpr long long kGrid = 1LL << 50;
  std::uniform_int_distribution<long long> u(-kGrid, kGrid - 1);
  const double unit = std::ldexp(1.0, -50);
  const auto d = static_cast<std::size_t>(n);
  Vector x(d);
  while (c.samples < want) {
    for (auto& v : x) v = static_cast<double>(u(rng)) * unit;
    const auto lam = dn_decode(x);
    if (std::any_of(lam.begin(), lam.end(), [](long long v) { return v != 0; })) continue;
    ++c.samples;
    const auto r = dn_voronoi_to_brick(x);
    c.offsets.insert(r.offset);
    long long parity = 0;
    for (auto v : r.offset) parity += v;
    const bool in_brick = r.y[0] >= 0.0 && r.y[0] < 2.0 &&
                          std::all_of(r.y.begin() + 1, r.y.end(),
                                      [](double v) { return v >= -0.5 && v < 0.5; });
    bool exact = dn_brick_to_voronoi(r.y) == x;
    for (std::size_t i = 0; i < d; ++i)
      exact = exact && r.y[i] + static_cast<double>(r.offset[i]) == x[i];
    if (parity % 2 != 0 || !in_brick || !exact) ++c.round_trip_failures;
    if (keep_points) c.brick_points.push_back(r.y);
  }
  return c;
}

void merge(DnCensus& into, DnCensus&& part) {
  into.samples += part.samples;
  into.round_trip_failures += part.round_trip_failures;
  into.offsets.merge(part.offsets);
  for (auto& p : part.brick_points) into.brick_points.push_back(std::move(p));
}

std::size_t block_size(std::size_t samples, std::size_t b) {
  return std::min(kSampleBlock, samples - b * kSampleBlock);
}

}  // namespace

namespace reference {

DnCensus dn_census(int n, std::size_t samples, std::uint64_t seed, bool keep_points) {
  if (n < 3) throw InvalidDimension("dn_census needs n >= 3");
  DnCensus out;
  for (std::size_t b = 0; b < block_count(samples); ++b)
    merge(out, census_block(n, block_size(samples, b), seed, b, keep_points));
  return out;
}

}  // namespace reference

namespace parallel {

DnCensus dn_census(int n, std::size_t samples, std::uint64_t seed, bool keep_points) {
  if (n < 3) throw InvalidDimension("dn_census needs n >= 3");
  const auto blocks = static_cast<std::int64_t>(block_count(samples));
  std::vector<DnCensus> parts(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const auto bu = static_cast<std::size_t>(b);
    parts[bu] = census_block(n, block_size(samples, bu), seed, bu, keep_points);
  }
  DnCensus out;
  for (auto& p : parts) merge(out, std::move(p));
  return out;
}

}  // namespace parallel

}  // namespace hill
