#ifndef SBINT_ERRORS_HPP
#define SBINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sbint {

// Base class for all library errors. Subclasses map 1:1 onto the C API
// status codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain (t <= 0 for gamma, NaN inputs,
// negative p, zero denominators, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Integral is divergent as stated (ball weight q <= -1).
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Multi-index length does not match the space dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Request outside the supported catalog (quadrature in high dimension,
// asymptotics for a family without a listed growth rate, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Result exceeds the double floating range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbint

#endif  // SBINT_ERRORS_HPP
