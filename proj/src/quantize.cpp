#include "hill/quantize.hpp"

#include <algorithm>
#include <cmath>

#include "hill/errors.hpp"
#include "hill/schoebi.hpp"

namespace hill {

Vector project_to_orthoscheme(std::span<const double> x) {
  // Pool-adjacent-violators for a non-increasing fit, then clamp.
  std::vector<double> value;
  std::vector<std::size_t> width;
  for (double v : x) {
    value.push_back(v);
    width.push_back(1);
    while (value.size() > 1 && value[value.size() - 2] < value.back()) {
      const auto w1 = width[width.size() - 2], w2 = width.back();
      const double merged = (value[value.size() - 2] * w1 + value.back() * w2) / (w1 + w2);
      value.pop_back();
      width.pop_back();
      value.back() = merged;
      width.back() = w1 + w2;
    }
  }
  Vector out;
  out.reserve(x.size());
  for (std::size_t b = 0; b < value.size(); ++b)
    out.insert(out.end(), width[b], std::clamp(value[b], 0.0, 1.0));
  return out;
}

QuantizeResult quantize(const PointSet& x, int rate_bits, QuantizerMode mode, double tol) {
  if (rate_bits < 1 || rate_bits > 52) throw ParameterRange("rate must be between 1 and 52 bits");
  const int n = static_cast<int>(x.dim());
  if (n < 1) throw InvalidDimension("quantize needs n >= 1");
  const auto sides = brick_dimensions(n);
  const double levels = std::ldexp(1.0, rate_bits);
  const auto top = static_cast<std::uint64_t>(levels) - 1;

  QuantizeResult res;
  res.rate_bits = rate_bits;
  res.mode = mode;
  res.points.resize(x.size());
  double total = 0.0;
  for (std::size_t s = 0; s < x.size(); ++s) {
    auto& qp = res.points[s];
    BrickMap trace;
    const auto y = theta(x.row(s), tol, &trace);
    Vector y_hat(y.size());
    qp.codes.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      const auto c = std::min(static_cast<std::uint64_t>(std::floor(y[i] / sides[i] * levels)), top);
      qp.codes[i] = c;
      y_hat[i] = (static_cast<double>(c) + 0.5) / levels * sides[i];
    }
    if (mode == QuantizerMode::plain) {
      qp.reconstruction = theta_inverse(y_hat, tol);
    } else {
      qp.stage_indices = trace.stage_indices;
      qp.reconstruction =
          project_to_orthoscheme(theta_inverse_with_pieces(y_hat, qp.stage_indices, tol));
    }
    qp.squared_error = 0.0;
    const auto row = x.row(s);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const double e = row[i] - qp.reconstruction[i];
      qp.squared_error += e * e;
    }
    total += qp.squared_error;
  }
  res.mse = x.size() ? total / static_cast<double>(x.size()) : 0.0;
  return res;
}

}  // namespace hill
