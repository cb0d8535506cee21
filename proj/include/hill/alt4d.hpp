#pragma once

// Six-piece dissection of the 4-dimensional orthoscheme into the prism
// sqrt(3/4)·P_3 x I_{1/2}, carried out in exact rational arithmetic.
//
// tau = O_4 - 1/2 is cut by w+y+z = -1/2 and w+x+z = 1/2 into tau1, tau2,
// tau3; alpha moves tau1 and beta moves tau3 to form tau4. Cutting tau4 at
// w+x+y+z = 0 and moving the upper half by gamma gives tau7.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hill/linalg.hpp"
#include "hill/polytope.hpp"
#include "hill/scalar.hpp"

namespace hill::alt4d {

using RVec = std::vector<Rational>;
using RPoly = HPolytope<Rational>;

struct FinalPiece {
  std::string name;     // e.g. "tau1-", "tau2+"
  RPoly source;         // position inside tau
  RationalIsometry map; // source -> final position
  RPoly placed;         // position inside tau7
  Rational volume;
};

struct Scene {
  std::map<std::string, RVec> points;  // A..R
  RationalIsometry alpha, beta, gamma;
  RPoly tau, tau1, tau2, tau3;
  RPoly tau1_moved, tau3_moved;  // alpha(tau1), beta(tau3)
  Hull<Rational> tau4;
  RPoly tau5, tau6, tau6_moved;
  Hull<Rational> tau7;
  std::vector<FinalPiece> pieces;

  const RVec& at(const std::string& name) const { return points.at(name); }
};

Scene build_scene();

struct SceneReport {
  bool named_points = false;      // F, G, H, I appear where the cuts put them
  bool parallel_edges = false;    // K-B = I-G = D-J = (1/3,1/3,1/3,1/3)
  bool alpha_fixes_bcf = false;
  bool beta_fixes_cdh = false;
  bool tau_symmetric = false;
  int alpha_det = 0, beta_det = 0, gamma_det = 0;
  bool passed() const;
};

struct Tau4Report {
  std::vector<std::string> vertex_names;  // matched named points
  std::size_t vertex_count = 0;
  std::size_t facet_count = 0;
  bool vertices_match = false;
  Rational volume;
  Rational parts_volume;
  bool parts_disjoint = false;
  bool passed() const;
};

struct Tau7Report {
  std::vector<std::string> vertex_names;
  std::size_t vertex_count = 0;
  bool vertices_match = false;
  Rational volume;
  bool volumes_conserved = false;
  bool positions = false;  // L on BK at 3/4, M bisects GI, N on JD at 1/4
  bool bases_congruent = false;
  bool prism_congruent = false;
  std::size_t final_pieces = 0;
  bool pieces_tile = false;
  bool passed() const;
};

SceneReport verify_scene(const Scene& s);
Tau4Report verify_tau4(const Scene& s);
Tau7Report verify_tau7(const Scene& s);

// Squared distances of sqrt(3/4)·P_3 x I_{1/2}: base vertices 0..3, then
// the same four lifted.
BasicMatrix<Rational> prism_squared_distances();

nlohmann::json scene_json(const Scene& s);
nlohmann::json report_json(const SceneReport& a, const Tau4Report& b, const Tau7Report& c);

}  // namespace hill::alt4d
