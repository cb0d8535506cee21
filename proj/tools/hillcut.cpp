// hillcut: brick maps, sampling, verification reports and piece export.
//
// Exit codes: 0 success, 1 a verification check failed, 2 domain
// violation, 3 parse or configuration error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hill/errors.hpp"
#include "hill/io.hpp"
#include "hill/kernels.hpp"
#include "hill/quantize.hpp"
#include "hill/schoebi.hpp"
#include "hill/simplex.hpp"
#include "hill/two_tile.hpp"
#include "hill/verify.hpp"

namespace {

using namespace hill;

constexpr int kExitFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitParse = 3;

struct RunConfig {
  std::string command;
  int n = 0;
  double w = 0.0;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  double tol = 1e-9;
  std::string format = "json";
  std::string out;
  std::string input;
  std::string target = "simplex";
  std::string suite = "all";
  std::string mode = "piece-aware";
  int rate = 8;
  int threads = 0;
};

// Values in the config file replace those given on the command line.
void apply_config(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::ParseError("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw io::ParseError(std::string("config: ") + e.what());
  }
  try {
    if (j.contains("n")) cfg.n = j["n"].get<int>();
    if (j.contains("w")) cfg.w = j["w"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<std::size_t>();
    if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("input")) cfg.input = j["input"].get<std::string>();
    if (j.contains("target")) cfg.target = j["target"].get<std::string>();
    if (j.contains("suite")) cfg.suite = j["suite"].get<std::string>();
    if (j.contains("mode")) cfg.mode = j["mode"].get<std::string>();
    if (j.contains("rate")) cfg.rate = j["rate"].get<int>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw io::ParseError(std::string("config: ") + e.what());
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.samples < 1) throw ParameterRange("--samples must be >= 1");
  if (!(cfg.tol >= 0.0)) throw ParameterRange("--tol must be non-negative");
  if (cfg.threads < 0) throw ParameterRange("--threads must be non-negative");
  const bool needs_n = cfg.command == "sample" || cfg.command == "pieces";
  if (needs_n && cfg.n < 1) throw InvalidDimension("--n must be >= 1");
  if (cfg.n >= 1 && cfg.command == "pieces") (void)ShiftMapParams::for_simplex(cfg.n, cfg.w);
}

// Writes to --out, or stdout when it is empty or "-".
template <class F>
void emit(const RunConfig& cfg, F&& write) {
  if (cfg.out.empty() || cfg.out == "-") {
    write(std::cout);
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw ConfigError("cannot write '" + cfg.out + "'");
  write(f);
}

PointSet read_points(const RunConfig& cfg) {
  if (cfg.input.empty() || cfg.input == "-") return io::read_csv(std::cin);
  return io::read_csv_file(cfg.input);
}

int report_rejects(const BatchResult& r) {
  if (r.failures() == 0) return 0;
  for (std::size_t i = 0; i < r.ok.size(); ++i)
    if (!r.ok[i]) std::cerr << "row " << i + 1 << ": outside the domain\n";
  std::cerr << r.failures() << " of " << r.ok.size() << " rows rejected\n";
  return kExitDomain;
}

int cmd_map(const RunConfig& cfg, bool inverse) {
  const auto pts = read_points(cfg);
  if (cfg.n > 0 && !pts.empty() && pts.dim() != static_cast<std::size_t>(cfg.n))
    throw io::ParseError("input rows have length " + std::to_string(pts.dim()) + ", --n is " +
                         std::to_string(cfg.n));
  const auto res = inverse ? parallel::theta_inverse_batch(pts, cfg.tol)
                           : parallel::theta_batch(pts, cfg.tol);
  emit(cfg, [&](std::ostream& o) { io::write_csv(o, res.points); });
  return report_rejects(res);
}

int cmd_sample(const RunConfig& cfg) {
  PointSet pts;
  if (cfg.target == "simplex") {
    pts = parallel::sample_simplex(make_simplex(cfg.n, cfg.w), cfg.samples, cfg.seed);
  } else if (cfg.target == "brick") {
    pts = parallel::sample_brick(cfg.n, cfg.samples, cfg.seed);
  } else if (cfg.target == "simplex-via-brick") {
    const auto y = parallel::sample_brick(cfg.n, cfg.samples, cfg.seed);
    auto res = parallel::theta_inverse_batch(y, cfg.tol);
    if (res.failures()) return report_rejects(res);
    pts = std::move(res.points);
  } else if (cfg.target == "dn-cell") {
    if (cfg.n < 3) throw InvalidDimension("dn-cell needs --n >= 3");
    const auto census = parallel::dn_census(cfg.n, cfg.samples, cfg.seed, true);
    pts = PointSet(static_cast<std::size_t>(cfg.n));
    for (const auto& y : census.brick_points) pts.push_back(dn_brick_to_voronoi(y));
  } else {
    throw ConfigError("unknown --target '" + cfg.target + "'");
  }
  emit(cfg, [&](std::ostream& o) { io::write_csv(o, pts); });
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  verify::Options opt;
  opt.n = cfg.n;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.thresholds.geometric = cfg.tol;
  const auto suites = verify::run(cfg.suite, opt);
  nlohmann::json j;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  bool ok = true;
  for (const auto& s : suites) {
    j["suites"].push_back(s.to_json());
    ok = ok && s.passed();
  }
  j["passed"] = ok;
  emit(cfg, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  return ok ? 0 : kExitFailed;
}

Isometry shift_isometry(const ShiftMapParams& p, int power) {
  const auto d = static_cast<std::size_t>(p.n);
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) m((j + d - 1) % d, j) = 1.0;
  Vector shift(d, p.b);
  shift[0] = p.a;
  Isometry step(m, shift);
  Isometry g = Isometry::identity(d);
  const Isometry unit = power < 0 ? step.inverse() : step;
  for (int i = 0; i < std::abs(power); ++i) g = g.then(unit);
  return g;
}

int cmd_pieces(const RunConfig& cfg) {
  const auto spec = make_simplex(cfg.n, cfg.w);
  const auto params = spec.shift_map();
  const auto simplex = simplex_halfspaces(spec);
  const bool vertices = cfg.n <= 4;
  if (!vertices) std::cerr << "n > 4: writing H-representations only\n";
  const double level = spec.apex_level();

  struct Piece {
    HPolytope<double> piece, moved;
  };
  std::vector<Piece> pieces;
  for (int k = 0; k < cfg.n; ++k) {
    auto p = simplex;
    const auto d = static_cast<std::size_t>(cfg.n);
    p.add({Vector(d, -1.0), -k * level});
    p.add({Vector(d, 1.0), (k + 1) * level});
    pieces.push_back({p, p.image(shift_isometry(params, -k))});
  }

  if (cfg.format == "json") {
    nlohmann::json j;
    j["n"] = cfg.n;
    j["w"] = cfg.w;
    j["prism"] = {{"c", make_prism(std::max(cfg.n, 2), cfg.w).cross_scale},
                  {"l", make_prism(std::max(cfg.n, 2), cfg.w).length}};
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      nlohmann::json pj;
      pj["index"] = k;
      if (vertices) {
        pj["piece"] = io::polytope_json(pieces[k].piece);
        pj["reassembled"] = io::polytope_json(pieces[k].moved);
        pj["volume"] = volume_exact(pieces[k].piece).value;
      } else {
        pj["piece"] = io::polytope_json(pieces[k].piece, {});
        pj["reassembled"] = io::polytope_json(pieces[k].moved, {});
      }
      j["pieces"].push_back(pj);
    }
    emit(cfg, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
    return 0;
  }
  if (cfg.format == "off") {
    if (cfg.n != 3) throw ConfigError("OFF output needs --n 3");
    const std::filesystem::path dir = cfg.out.empty() ? "." : cfg.out;
    std::filesystem::create_directories(dir);
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      std::ofstream a(dir / ("piece_" + std::to_string(k) + ".off"));
      io::write_off(a, pieces[k].piece);
      std::ofstream b(dir / ("reassembled_" + std::to_string(k) + ".off"));
      io::write_off(b, pieces[k].moved);
    }
    return 0;
  }
  if (cfg.format == "svg") {
    if (cfg.n != 2) throw ConfigError("SVG output needs --n 2");
    std::vector<std::vector<Vector>> polys;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      polys.push_back(io::order_polygon(enumerate_vertices(pieces[k].piece).polytope.vertices));
      labels.push_back("piece " + std::to_string(k));
    }
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      auto v = enumerate_vertices(pieces[k].moved).polytope.vertices;
      for (auto& p : v) p[0] += 1.5;
      polys.push_back(io::order_polygon(v));
      labels.push_back("moved " + std::to_string(k));
    }
    emit(cfg, [&](std::ostream& o) { io::write_svg(o, polys, labels); });
    return 0;
  }
  throw ConfigError("unknown --format '" + cfg.format + "' for pieces");
}

int cmd_quantize(const RunConfig& cfg) {
  QuantizerMode mode;
  if (cfg.mode == "plain")
    mode = QuantizerMode::plain;
  else if (cfg.mode == "piece-aware")
    mode = QuantizerMode::piece_aware;
  else
    throw ConfigError("unknown --mode '" + cfg.mode + "'");
  const auto pts = read_points(cfg);
  if (pts.empty()) {
    emit(cfg, [&](std::ostream& o) { o << nlohmann::json{{"points", 0}, {"mse", 0.0}}.dump(2) << '\n'; });
    return 0;
  }
  // Reject bad rows up front so they can be listed.
  BatchResult check = parallel::theta_batch(pts, cfg.tol);
  if (check.failures()) return report_rejects(check);
  const auto res = quantize(pts, cfg.rate, mode, cfg.tol);
  nlohmann::json j;
  j["rate_bits"] = res.rate_bits;
  j["mode"] = cfg.mode;
  j["points"] = res.points.size();
  j["mse"] = res.mse;
  for (const auto& p : res.points) {
    nlohmann::json pj{{"codes", p.codes}, {"reconstruction", p.reconstruction},
                      {"squared_error", p.squared_error}};
    if (!p.stage_indices.empty()) pj["stage_indices"] = p.stage_indices;
    j["encoded"].push_back(pj);
  }
  emit(cfg, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  return 0;
}

int dispatch(RunConfig cfg, const std::string& config_path) {
  if (!config_path.empty()) apply_config(cfg, config_path);
  validate(cfg);
  parallel::set_threads(cfg.threads);
  if (cfg.command == "map") return cmd_map(cfg, false);
  if (cfg.command == "unmap") return cmd_map(cfg, true);
  if (cfg.command == "sample") return cmd_sample(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "pieces") return cmd_pieces(cfg);
  if (cfg.command == "quantize") return cmd_quantize(cfg);
  throw ConfigError("no command given");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string config_path;
  if (const char* env = std::getenv("HILLCUT_THREADS")) {
    try {
      cfg.threads = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "HILLCUT_THREADS is not an integer\n";
      return kExitParse;
    }
  }

  CLI::App app{"Simplex-to-brick dissections: map, sample, verify, export pieces"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Monte Carlo sample count")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Domain tolerance")->capture_default_str();
  app.add_option("--format", cfg.format, "json, csv, off or svg")->capture_default_str();
  app.add_option("--out", cfg.out, "Output file or directory (default stdout)");
  app.add_option("--config", config_path, "JSON config; its values override flags");
  app.add_option("--threads", cfg.threads, "OpenMP threads (default HILLCUT_THREADS)");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Dimension");
    sub->add_option("--w", cfg.w, "Hill simplex parameter")->capture_default_str();
  };

  auto* map = app.add_subcommand("map", "Apply Theta to each CSV row");
  add_common(map);
  map->add_option("input", cfg.input, "CSV of points in O_n (default stdin)");
  auto* unmap = app.add_subcommand("unmap", "Apply the inverse map to each CSV row");
  add_common(unmap);
  unmap->add_option("input", cfg.input, "CSV of brick points (default stdin)");

  auto* sample = app.add_subcommand("sample", "Uniform samples as CSV");
  add_common(sample);
  sample->add_option("--target", cfg.target, "simplex, brick, simplex-via-brick or dn-cell")
      ->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Run verification suites and print a JSON report");
  add_common(ver);
  ver->add_option("suite", cfg.suite, "all, schoebi, two-tile, dudeney, alt4d or dn")
      ->capture_default_str();

  auto* pieces = app.add_subcommand("pieces", "Export the n pieces of Q_n(w) and their images");
  add_common(pieces);

  auto* quant = app.add_subcommand("quantize", "Quantize points of O_n in brick coordinates");
  add_common(quant);
  quant->add_option("--rate", cfg.rate, "Bits per dimension")->capture_default_str();
  quant->add_option("--mode", cfg.mode, "piece-aware or plain")->capture_default_str();
  quant->add_option("input", cfg.input, "CSV of points in O_n (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return kExitParse;
  }
  for (const auto* sub : {map, unmap, sample, ver, pieces, quant})
    if (sub->parsed()) cfg.command = sub->get_name();

  try {
    return dispatch(cfg, config_path);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitParse;
  } catch (const hill::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
