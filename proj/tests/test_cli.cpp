#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hill/io.hpp"
#include "hill/schoebi.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run hillcut(const std::string& args) {
  const std::string cmd = std::string(HILLCUT_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hillcut_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto f = path / name;
    std::ofstream(f) << text;
    return f.string();
  }
};

}  // namespace

TEST_CASE("sample, map and unmap round trip") {
  TempDir dir;
  const auto s = hillcut("sample --n 4 --samples 300 --seed 5");
  REQUIRE(s.status == 0);
  const auto x_file = dir.write("x.csv", s.out);
  const auto m = hillcut("map --n 4 " + x_file);
  REQUIRE(m.status == 0);
  const auto y_file = dir.write("y.csv", m.out);
  const auto u = hillcut("unmap --n 4 " + y_file);
  REQUIRE(u.status == 0);

  std::istringstream xs(s.out), us(u.out);
  const auto x = hill::io::read_csv(xs), back = hill::io::read_csv(us);
  REQUIRE(x.size() == 300);
  REQUIRE(back.size() == 300);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(hill::max_abs_diff(x.row(i), back.row(i)) < 1e-9);

  CHECK(hillcut("sample --n 4 --samples 300 --seed 5").out == s.out);
  CHECK(hillcut("sample --n 4 --samples 300 --seed 6").out != s.out);
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(hillcut("map --n 3 " + dir.write("bad.csv", "0.5,0.7,0.1\n")).status == 2);
  CHECK(hillcut("map --n 3 " + dir.write("word.csv", "0.5,abc,0.1\n")).status == 3);
  CHECK(hillcut("map --n 3 " + dir.write("short.csv", "0.5,0.1\n")).status == 3);
  CHECK(hillcut("map --n 3 " + dir.write("empty.csv", "")).status == 0);
  CHECK(hillcut("map --n 3 " + (dir.path / "missing.csv").string()).status == 3);
  CHECK(hillcut("verify nosuchsuite").status == 3);
  CHECK(hillcut("--config " + dir.write("cfg.json", "{not json") + " sample --n 3").status == 3);
  CHECK(hillcut("sample --n 3 --w 0.7").status == 2);
}

TEST_CASE("verify reports") {
  const auto v = hillcut("verify alt4d");
  CHECK(v.status == 0);
  const auto j = nlohmann::json::parse(v.out);
  CHECK(j.dump().find("\"passed\":true") != std::string::npos);

  const auto s = hillcut("verify schoebi --n 2 --samples 2000");
  CHECK(s.status == 0);
  CHECK(s.out.find("0.7071067811865") != std::string::npos);
}

TEST_CASE("pieces export") {
  const auto p = hillcut("pieces --n 3");
  REQUIRE(p.status == 0);
  const auto j = nlohmann::json::parse(p.out);
  REQUIRE(j.at("pieces").size() == 3);
  double total = 0;
  for (const auto& piece : j.at("pieces")) total += piece.at("volume").get<double>();
  CHECK(total == doctest::Approx(1.0 / 6));

  TempDir dir;
  CHECK(hillcut("--format off --out " + dir.path.string() + " pieces --n 3").status == 0);
  std::size_t offs = 0;
  for (const auto& e : fs::directory_iterator(dir.path)) offs += e.path().extension() == ".off";
  CHECK(offs >= 3);
  const auto svg = hillcut("--format svg pieces --n 2");
  CHECK(svg.status == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
}

TEST_CASE("quantize command") {
  TempDir dir;
  const auto s = hillcut("sample --n 3 --samples 50 --seed 2");
  const auto f = dir.write("x.csv", s.out);
  const auto q = hillcut("quantize --n 3 --rate 10 " + f);
  REQUIRE(q.status == 0);
  const auto j = nlohmann::json::parse(q.out);
  CHECK(j.at("rate_bits").get<int>() == 10);
  CHECK(j.at("mse").get<double>() < 1e-5);
  CHECK(hillcut("quantize --n 3 --mode fancy " + f).status == 3);
}

TEST_CASE("config file overrides flags") {
  TempDir dir;
  const auto cfg = dir.write("c.json", R"({"n": 2, "samples": 4, "seed": 9})");
  const auto r = hillcut("--config " + cfg + " sample --n 5 --samples 100");
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  const auto pts = hill::io::read_csv(in);
  CHECK(pts.dim() == 2);
  CHECK(pts.size() == 4);
}
