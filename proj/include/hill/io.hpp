#pragma once

// Point and polytope I/O: CSV points, JSON polytopes, OFF and SVG.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hill/points.hpp"
#include "hill/polytope.hpp"

namespace hill::io {

// Thrown for malformed input files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// One point per line, comma separated. Blank lines and lines starting with
// '#' are skipped. `dim` = 0 takes the width of the first row.
PointSet read_csv(std::istream& in, std::size_t dim = 0);
PointSet read_csv_file(const std::string& path, std::size_t dim = 0);
void write_csv(std::ostream& out, const PointSet& pts);

// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

template <class T>
nlohmann::json polytope_json(const HPolytope<T>& p, const std::vector<std::vector<T>>& vertices) {
  nlohmann::json j;
  j["dimension"] = p.dim();
  auto verts = nlohmann::json::array();
  for (const auto& v : vertices) {
    auto row = nlohmann::json::array();
    for (const auto& c : v) row.push_back(to_double(c));
    verts.push_back(row);
  }
  j["vertices"] = verts;
  auto hs = nlohmann::json::array();
  for (const auto& h : p.halfspaces()) {
    auto normal = nlohmann::json::array();
    for (const auto& c : h.normal) normal.push_back(to_double(c));
    hs.push_back({{"normal", normal}, {"offset", to_double(h.offset)}});
  }
  j["halfspaces"] = hs;
  if constexpr (is_exact_v<T>) {
    auto exact = nlohmann::json::array();
    for (const auto& v : vertices) {
      auto row = nlohmann::json::array();
      for (const auto& c : v) row.push_back(to_string(c));
      exact.push_back(row);
    }
    j["vertices_exact"] = exact;
  }
  return j;
}

template <class T>
nlohmann::json polytope_json(const HPolytope<T>& p) {
  auto e = enumerate_vertices(p);
  return polytope_json(p, e.polytope.vertices);
}

// HPolytope from {halfspaces:[{normal, offset}]}.
HPolytope<double> polytope_from_json(const nlohmann::json& j);

// OFF for a 3-dimensional polytope (facets from tight halfspaces).
void write_off(std::ostream& out, const HPolytope<double>& p);

// Polygons in one SVG, each a list of 2D vertices in boundary order.
void write_svg(std::ostream& out, const std::vector<std::vector<Vector>>& polygons,
               const std::vector<std::string>& labels = {});

// Vertices of a 2D polygon sorted counter-clockwise around the centroid.
std::vector<Vector> order_polygon(std::vector<Vector> pts);

}  // namespace hill::io
