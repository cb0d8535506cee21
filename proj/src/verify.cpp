#include "hill/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "hill/alt4d.hpp"
#include "hill/errors.hpp"
#include "hill/kernels.hpp"
#include "hill/schoebi.hpp"
#include "hill/stats.hpp"
#include "hill/two_tile.hpp"

namespace hill::verify {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    den += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return num / den;
}

}  // namespace

bool Suite::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

nlohmann::json Suite::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"measured", c.measured},
                   {"threshold", c.threshold}});
  return {{"suite", name}, {"passed", passed()}, {"checks", arr}};
}

Suite schoebi(const Options& opt) {
  const auto& t = opt.thresholds;
  Suite s{"schoebi", {}};
  std::vector<int> dims;
  if (opt.n > 0)
    dims = {opt.n};
  else
    dims = {2, 3, 4, 5, 6};

  for (int n : dims) {
    const std::string tag = "n=" + std::to_string(n);
    const auto sides = brick_dimensions(n);
    double prod = 1.0;
    for (double v : sides) prod *= v;
    s.checks.push_back({tag + " brick volume", std::abs(prod * factorial(n) - 1.0) < 1e-10,
                        {{"sides", sides}, {"product_times_n_factorial", prod * factorial(n)}},
                        "relative 1e-10"});
    if (n == 1) continue;

    const auto pts = parallel::sample_simplex(make_simplex(n, 0.0), opt.samples, opt.seed);
    const auto fwd = parallel::theta_batch(pts, t.geometric);
    const auto back = parallel::theta_inverse_batch(fwd.points, t.geometric);
    double err = 0.0;
    std::size_t outside = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      err = std::max(err, max_abs_diff(pts.row(i), back.points.row(i)));
      if (!in_brick(fwd.points.row(i), t.geometric)) ++outside;
    }
    s.checks.push_back({tag + " round trip", err < t.geometric && outside == 0 &&
                                                 fwd.failures() == 0 && back.failures() == 0,
                        {{"max_error", err}, {"outside_brick", outside}},
                        sci(t.geometric)});

    // Image of uniform O_n must be uniform on the brick, axis by axis.
    double worst_p = 1.0;
    for (std::size_t k = 0; k < sides.size(); ++k) {
      std::vector<double> col(fwd.points.size());
      for (std::size_t i = 0; i < col.size(); ++i) col[i] = fwd.points.row(i)[k];
      worst_p = std::min(worst_p, stats::ks_uniform(col, 0.0, sides[k]).p_value);
    }
    s.checks.push_back({tag + " brick uniformity", worst_p > t.ks_alpha,
                        {{"min_ks_p_value", worst_p}}, "p > " + sci(t.ks_alpha)});

    // Stage-A frequencies against A(n, r)/n!.
    std::vector<std::size_t> counts(static_cast<std::size_t>(n), 0);
    BrickMap trace;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      (void)theta(pts.row(i), t.geometric, &trace);
      ++counts[static_cast<std::size_t>(trace.stage_indices.front())];
    }
    double worst_z = 0.0;
    if (n <= 20) {
      for (int r = 0; r < n; ++r) {
        const double p = stats::eulerian(n, r) / factorial(n);
        const double m = static_cast<double>(pts.size());
        const double sd = std::sqrt(m * p * (1 - p));
        if (sd > 0)
          worst_z = std::max(worst_z, std::abs(static_cast<double>(counts[static_cast<std::size_t>(r)]) - m * p) / sd);
      }
      s.checks.push_back({tag + " stage frequencies", worst_z <= t.sigma,
                          {{"counts", counts}, {"max_sigma", worst_z}}, sci(t.sigma) + " sigma"});
    }

    if (n <= 6) {
      const auto rep = check_prism_tiling(n, 0.0, opt.samples, opt.seed);
      s.checks.push_back({tag + " prism tiling", rep.passed(),
                          {{"uncovered", rep.uncovered},
                           {"overlaps", rep.overlaps},
                           {"forward_failures", rep.forward_failures}},
                          "zero violations"});
      const auto pieces = count_pieces_recursive(n, opt.samples, opt.seed);
      s.checks.push_back({tag + " recursive pieces", pieces <= factorial(n) && pieces >= 1,
                          {{"distinct_index_vectors", pieces}, {"bound", factorial(n)}},
                          "<= n!"});
    }
  }

  // Operation count and wall time for O(n^2).
  std::vector<double> ns{4, 8, 16, 32, 64}, ops, secs;
  for (double nd : ns) {
    const int n = static_cast<int>(nd);
    const auto pts = parallel::sample_simplex(make_simplex(n, 0.0), 200, opt.seed);
    OpCounter c;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < pts.size(); ++i) (void)theta(pts.row(i), t.geometric, nullptr, &c);
    secs.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    ops.push_back(static_cast<double>(c.flops) / static_cast<double>(pts.size()));
  }
  const double slope = loglog_slope(ns, ops);
  s.checks.push_back({"operation count slope", std::abs(slope - 2.0) <= 0.2,
                      {{"n", ns}, {"ops_per_point", ops}, {"seconds", secs}, {"slope", slope}},
                      "2.0 +- 0.2"});
  return s;
}

Suite two_tile(const Options& opt) {
  Suite s{"two-tile", {}};
  for (const auto& inst : {example_square(), example_strip()}) {
    const auto rep = check_two_tile(inst, opt.samples, opt.seed);
    s.checks.push_back({inst.name, rep.passed() && rep.pieces_a.size() == 2, rep.to_json(),
                        "exactly-once cover, 2 pieces"});
  }
  return s;
}

Suite dudeney(const Options& opt) {
  Suite s{"dudeney", {}};
  const auto c = dudeney_build();
  s.checks.push_back({"offset 1-2c3", std::abs(c.offset() - 0.009015) <= 1e-5,
                      {{"value", c.offset()}, {"target", 0.009015}}, "1e-5"});
  s.checks.push_back({"angle CLG", std::abs(c.angle_clg_degrees() - 41.15) <= 0.01,
                      {{"degrees", c.angle_clg_degrees()}, {"target", 41.15}}, "0.01 deg"});
  s.checks.push_back({"lattice angle", std::abs(c.lattice_angle_acute_degrees() - 89.04) <= 0.01,
                      {{"degrees", c.lattice_angle_degrees()},
                       {"acute_degrees", c.lattice_angle_acute_degrees()},
                       {"target", 89.04}},
                      "0.01 deg"});
  const auto& ph = c.at("P");
  s.checks.push_back({"strips misaligned", std::abs(ph[0]) >= 0.009,
                      {{"P", ph}}, "|P_x| >= 0.009"});
  const auto rep = dudeney_check(c, opt.samples, opt.seed);
  s.checks.push_back({"pieces", rep.exact_piece_set, {{"matched", rep.matched}},
                      "exactly OBJG, ODHB, HEI, BIFJ"});
  s.checks.push_back({"cover", rep.two_tile.passed(), rep.two_tile.to_json(), "zero violations"});
  s.checks.push_back({"areas", std::abs(rep.area_sum - c.c1) < 1e-9 &&
                                   std::abs(rep.mapped_area_sum - c.c2 * c.c2) < 1e-9 &&
                                   rep.mapped_inside,
                      {{"area_sum", rep.area_sum}, {"mapped_area_sum", rep.mapped_area_sum}},
                      "1e-9"});
  return s;
}

Suite alt4d(const Options&) {
  Suite s{"alt4d", {}};
  const auto scene = alt4d::build_scene();
  const auto a = alt4d::verify_scene(scene);
  const auto b = alt4d::verify_tau4(scene);
  const auto c = alt4d::verify_tau7(scene);
  const auto j = alt4d::report_json(a, b, c);
  s.checks.push_back({"scene", a.passed(), j.at("scene"), "exact"});
  s.checks.push_back({"tau4", b.passed(), j.at("tau4"), "exact"});
  s.checks.push_back({"tau7", c.passed(), j.at("tau7"), "exact"});
  return s;
}

Suite dn(const Options& opt) {
  Suite s{"dn", {}};
  std::vector<int> dims;
  if (opt.n >= 3)
    dims = {opt.n};
  else
    dims = {3, 4, 5};
  for (int n : dims) {
    const auto c = parallel::dn_census(n, opt.samples, opt.seed, true);
    double worst_p = 1.0;
    for (int k = 0; k < n; ++k) {
      std::vector<double> col;
      for (const auto& p : c.brick_points) col.push_back(p[static_cast<std::size_t>(k)]);
      worst_p = std::min(worst_p, k == 0 ? stats::ks_uniform(col, 0.0, 2.0).p_value
                                         : stats::ks_uniform(col, -0.5, 0.5).p_value);
    }
    s.checks.push_back({"n=" + std::to_string(n),
                        c.offsets.size() == static_cast<std::size_t>(2 * n) &&
                            c.round_trip_failures == 0 && worst_p > opt.thresholds.ks_alpha,
                        {{"offsets", c.offsets.size()},
                         {"round_trip_failures", c.round_trip_failures},
                         {"min_ks_p_value", worst_p}},
                        "2n offsets, exact round trip, KS p > " + sci(opt.thresholds.ks_alpha)});
  }
  return s;
}

std::vector<Suite> run(const std::string& which, const Options& opt) {
  if (which == "schoebi") return {schoebi(opt)};
  if (which == "two-tile") return {two_tile(opt)};
  if (which == "dudeney") return {dudeney(opt)};
  if (which == "alt4d") return {alt4d(opt)};
  if (which == "dn") return {dn(opt)};
  if (which == "all") return {schoebi(opt), two_tile(opt), dudeney(opt), alt4d(opt), dn(opt)};
  throw ConfigError("unknown suite '" + which + "'");
}

}  // namespace hill::verify
