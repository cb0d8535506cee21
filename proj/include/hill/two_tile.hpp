#pragma once

// Two-tile checks: two polytopes A and B that each tile a region Omega under
// a group of isometries are cut into congruent pieces A ∩ B^g. The checker
// samples Omega and counts how many images of each tile cover every point.
//
// Also here: the triangle/square instances, Dudeney's dissection and the
// reduction of the D_n Voronoi cell to a brick.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hill/linalg.hpp"
#include "hill/polytope.hpp"

namespace hill {

struct GroupSpec {
  enum class Kind { finite, cyclic_infinite, crystallographic };

  Kind kind = Kind::finite;
  std::vector<Isometry> generators;

  // Breadth-first closure over generators and their inverses, deduplicated,
  // stopping after `bound` distinct elements. Identity first.
  std::vector<Isometry> elements(std::size_t bound, double tol = 1e-9) const;
};

struct Omega {
  enum class Type { window, strip, all };

  Type type = Type::window;
  HPolytope<double> region;  // membership; empty for `all`
  Vector lo, hi;             // sampling box

  bool contains(std::span<const double> x, double tol) const;
  static Omega window(Vector lo, Vector hi);
  static Omega strip(HPolytope<double> region, Vector lo, Vector hi);
  static Omega all(Vector lo, Vector hi);
};

struct TwoTileInstance {
  std::string name;
  Omega omega;
  GroupSpec group;
  HPolytope<double> tile_a;
  HPolytope<double> tile_b;
  std::size_t element_bound = 64;
};

struct TilePiece {
  std::size_t element = 0;  // index into the enumerated group elements
  Isometry g;
  std::vector<Vector> vertices;
  double volume = 0.0;
  double mc_volume = 0.0;
  double mc_error = 0.0;
};

struct CoverTally {
  std::size_t uncovered = 0;
  std::size_t overlaps = 0;
};

struct TwoTileReport {
  std::string name;
  double volume_a = 0.0;
  double volume_b = 0.0;
  bool volume_mismatch = false;
  std::size_t elements = 0;
  std::size_t samples = 0;
  std::size_t resampled = 0;
  CoverTally cover_a, cover_b;
  std::vector<TilePiece> pieces_a;  // A ∩ B^g
  std::vector<TilePiece> pieces_b;  // B ∩ A^g
  bool piece_volumes_match = false;

  bool passed() const {
    return !volume_mismatch && cover_a.uncovered == 0 && cover_a.overlaps == 0 &&
           cover_b.uncovered == 0 && cover_b.overlaps == 0 && piece_volumes_match;
  }
  nlohmann::json to_json() const;
};

// Throws ConfigError if Omega has no sampling box or dimensions disagree.
TwoTileReport check_two_tile(const TwoTileInstance& instance, std::size_t samples,
                             std::uint64_t seed);

// Triangle (0,0),(1,0),(1,1) and rectangle [0,1/2]x[0,1] in the unit square
// under {id, (x,y) -> (1-x,1-y)}.
TwoTileInstance example_square();

// Same tiles in the strip x >= y >= x-1 under the group generated by
// (x,y) -> (y+1, x).
TwoTileInstance example_strip();

TwoTileInstance load_instance(const nlohmann::json& j);

HPolytope<double> polygon_halfspaces(const std::vector<Vector>& ccw_vertices);

struct DudeneyConstants {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  std::map<std::string, Vector> points;  // O, A..L, P

  const Vector& at(const std::string& name) const { return points.at(name); }
  double offset() const { return 1.0 - 2.0 * c3; }
  double angle_clg_degrees() const;
  // Angle between OH and OJ, and its acute form.
  double lattice_angle_degrees() const;
  double lattice_angle_acute_degrees() const;
};

DudeneyConstants dudeney_build();

struct DudeneyReport {
  TwoTileReport two_tile;
  std::vector<std::string> matched;  // names of matched pieces
  bool exact_piece_set = false;
  double area_sum = 0.0;
  double mapped_area_sum = 0.0;
  bool mapped_inside = false;

  bool passed() const;
};

TwoTileInstance dudeney_instance(const DudeneyConstants& c);
DudeneyReport dudeney_check(const DudeneyConstants& c, std::size_t samples, std::uint64_t seed);

using IntPoint = std::vector<long long>;

// Nearest point of D_n (integer vectors with even sum). Ties in the parity
// fix go to the smallest index.
IntPoint dn_decode(std::span<const double> x);

struct BrickReduction {
  IntPoint offset;  // in D_n
  Vector y;         // in [0,2) x [-1/2,1/2)^{n-1}
};

// Reduces a point of the Voronoi cell modulo D_n into the brick. Throws
// DomainError if x is not in the cell (within tol).
BrickReduction dn_voronoi_to_brick(std::span<const double> x, double tol = 1e-9);

// Inverse: the cell point congruent to a brick point.
Vector dn_brick_to_voronoi(std::span<const double> y);

struct DnCensus {
  std::size_t samples = 0;
  std::set<IntPoint> offsets;
  std::size_t round_trip_failures = 0;
  std::vector<Vector> brick_points;  // kept only when requested
};

namespace reference {
DnCensus dn_census(int n, std::size_t samples, std::uint64_t seed, bool keep_points = false);
}
namespace parallel {
DnCensus dn_census(int n, std::size_t samples, std::uint64_t seed, bool keep_points = false);
}

}  // namespace hill
