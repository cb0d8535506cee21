#include "hill/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hill::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

PointSet read_csv(std::istream& in, std::size_t dim) {
  PointSet out(dim);
  std::string line;
  std::size_t lineno = 0;
  Vector row;
  bool sized = dim != 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    row.clear();
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      auto field = trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
      double v = 0.0;
      const auto* first = field.data();
      if (!field.empty() && *first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() ||
          !std::isfinite(v))
        throw ParseError("line " + std::to_string(lineno) + ": bad number '" + std::string(field) +
                         "'");
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!sized) {
      out = PointSet(row.size());
      sized = true;
    }
    if (row.size() != out.dim())
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(out.dim()) +
                       " values, got " + std::to_string(row.size()));
    out.push_back(row);
  }
  return out;
}

PointSet read_csv_file(const std::string& path, std::size_t dim) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_csv(in, dim);
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const PointSet& pts) {
  for (std::size_t s = 0; s < pts.size(); ++s) {
    const auto row = pts.row(s);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

HPolytope<double> polytope_from_json(const nlohmann::json& j) {
  try {
    const auto& hs = j.at("halfspaces");
    if (hs.empty()) throw ParseError("polytope has no halfspaces");
    const auto dim = hs.front().at("normal").size();
    HPolytope<double> p(dim);
    for (const auto& h : hs) p.add({h.at("normal").get<Vector>(), h.at("offset").get<double>()});
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polytope: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("polytope: ") + e.what());
  }
}

std::vector<Vector> order_polygon(std::vector<Vector> pts) {
  if (pts.empty()) return pts;
  double cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += p[0];
    cy += p[1];
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const Vector& a, const Vector& b) {
    return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
  });
  return pts;
}

void write_off(std::ostream& out, const HPolytope<double>& p) {
  if (p.dim() != 3) throw DimensionMismatch("OFF output needs a 3-dimensional polytope");
  const auto e = enumerate_vertices(p);
  const auto& verts = e.polytope.vertices;
  const auto fs = facets(e, p.halfspaces().size());
  std::vector<std::vector<std::size_t>> faces;
  for (const auto& f : fs) {
    if (f.vertices.size() < 3) continue;
    // Order the face around its centroid, projected to the plane.
    const auto& n = p.halfspaces()[f.halfspace].normal;
    Vector c(3, 0.0);
    for (auto i : f.vertices)
      for (int k = 0; k < 3; ++k) c[k] += verts[i][k] / static_cast<double>(f.vertices.size());
    Vector u = subtract<double>(verts[f.vertices[0]], c);
    Vector v{n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]};
    auto idx = f.vertices;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const auto da = subtract<double>(verts[a], c), db = subtract<double>(verts[b], c);
      return std::atan2(dot<double>(da, v), dot<double>(da, u)) <
             std::atan2(dot<double>(db, v), dot<double>(db, u));
    });
    faces.push_back(std::move(idx));
  }
  out << "OFF\n" << verts.size() << ' ' << faces.size() << " 0\n";
  for (const auto& v : verts)
    out << format_double(v[0]) << ' ' << format_double(v[1]) << ' ' << format_double(v[2]) << '\n';
  for (const auto& f : faces) {
    out << f.size();
    for (auto i : f) out << ' ' << i;
    out << '\n';
  }
}

void write_svg(std::ostream& out, const std::vector<std::vector<Vector>>& polygons,
               const std::vector<std::string>& labels) {
  double lo_x = INFINITY, lo_y = INFINITY, hi_x = -INFINITY, hi_y = -INFINITY;
  for (const auto& poly : polygons)
    for (const auto& p : poly) {
      lo_x = std::min(lo_x, p[0]);
      hi_x = std::max(hi_x, p[0]);
      lo_y = std::min(lo_y, p[1]);
      hi_y = std::max(hi_y, p[1]);
    }
  if (polygons.empty() || !std::isfinite(lo_x)) lo_x = lo_y = 0, hi_x = hi_y = 1;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double size = 400.0, pad = 20.0;
  auto sx = [&](double x) { return pad + (x - lo_x) / span * size; };
  auto sy = [&](double y) { return pad + (hi_y - y) / span * size; };
  static const char* colors[] = {"#8dd3c7", "#fb8072", "#80b1d3", "#fdb462",
                                 "#b3de69", "#bebada", "#fccde5", "#d9d9d9"};
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * pad << "\" height=\""
      << size + 2 * pad << "\">\n";
  for (std::size_t k = 0; k < polygons.size(); ++k) {
    out << "  <polygon fill=\"" << colors[k % 8] << "\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < polygons[k].size(); ++i) {
      if (i) out << ' ';
      out << sx(polygons[k][i][0]) << ',' << sy(polygons[k][i][1]);
    }
    out << "\"/>\n";
    if (k < labels.size() && !polygons[k].empty()) {
      double cx = 0, cy = 0;
      for (const auto& p : polygons[k]) {
        cx += p[0];
        cy += p[1];
      }
      cx /= static_cast<double>(polygons[k].size());
      cy /= static_cast<double>(polygons[k].size());
      out << "  <text x=\"" << sx(cx) << "\" y=\"" << sy(cy)
          << "\" font-size=\"12\" text-anchor=\"middle\">" << labels[k] << "</text>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace hill::io
