#pragma once

#include <stdexcept>
#include <string>

namespace evasion {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Wedge direction undefined because prey and predator coincide.
struct CoincidentPositions : Error {
  using Error::Error;
};

// A constructor or operation received an argument outside its contract.
struct InvalidParameter : Error {
  using Error::Error;
};

// Query point outside the hull of a tabulated mesh.
struct OutOfDomain : Error {
  using Error::Error;
};

// Radial profile requested from a potential that is not radially symmetric.
struct NotRadial : Error {
  using Error::Error;
};

// Adaptive quadrature did not reach the requested tolerance.
struct QuadratureFailure : Error {
  using Error::Error;
};

// Paired arrays of different lengths.
struct LengthMismatch : Error {
  using Error::Error;
};

// Step or bin index outside the stored range.
struct IndexOutOfRange : Error {
  using Error::Error;
};

// Predator and prey coincide before a pursuit step; the trajectory halts.
struct CaptureEvent : Error {
  using Error::Error;
};

// File could not be read or written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace evasion
