#pragma once

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hill {

using Rational = boost::multiprecision::cpp_rational;

// Tolerance-aware zero tests. Rationals are compared exactly and ignore eps.
inline bool near_zero(double v, double eps) { return std::abs(v) <= eps; }
inline bool near_zero(const Rational& v, double /*eps*/) { return v == 0; }

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline std::string to_string(double v) { return std::to_string(v); }
inline std::string to_string(const Rational& v) { return v.str(); }

// True for exact scalar types where tolerances do not apply.
template <class T>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rational> = true;

struct Tolerances {
  double algebraic = 1e-12;
  double geometric = 1e-9;
  double pivot = 1e-11;
};

}  // namespace hill
