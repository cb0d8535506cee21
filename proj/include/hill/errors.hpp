#pragma once

#include <stdexcept>
#include <string>

namespace hill {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Simplex parameter w outside (-1, 1/(n-1)), non-positive sample counts, ...
class ParameterRange : public Error {
 public:
  using Error::Error;
};

// Point outside the domain of a map (beyond the projection tolerance).
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hill
