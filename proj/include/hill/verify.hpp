#pragma once

// Verification suites behind `hillcut verify`. Each check records what was
// measured and the threshold it was held to.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hill::verify {

// All verification thresholds in one place.
struct Thresholds {
  double geometric = 1e-9;
  double algebraic = 1e-12;
  double sigma = 3.0;      // Monte Carlo frequency band
  double ks_alpha = 1e-3;  // KS significance
};

struct Options {
  int n = 0;  // 0 runs the default range of dimensions
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  Thresholds thresholds;
};

struct Check {
  std::string name;
  bool passed = false;
  nlohmann::json measured;
  std::string threshold;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

Suite schoebi(const Options& opt);
Suite two_tile(const Options& opt);
Suite dudeney(const Options& opt);
Suite alt4d(const Options& opt);
Suite dn(const Options& opt);

// which: all | schoebi | two-tile | dudeney | alt4d | dn. Throws ConfigError
// for other names.
std::vector<Suite> run(const std::string& which, const Options& opt);

}  // namespace hill::verify
