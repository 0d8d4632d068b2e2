// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#pragma once

#include <stdexcept>
#include <string>

namespace pdc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Wavelength outside a fit's validity window. Fits are never extrapolated.
struct OutOfRangeError : Error {
  OutOfRangeError(double wavelength_nm, double min_nm, double max_nm)
      : Error("wavelength " + std::to_string(wavelength_nm) +
              " nm outside fit validity range [" + std::to_string(min_nm) +
              ", " + std::to_string(max_nm) + "] nm"),
        wavelength_nm(wavelength_nm) {}
  double wavelength_nm;
};

struct ParseError : Error {
  ParseError(const std::string& origin, int line, const std::string& reason)
      : Error(origin + ":" + std::to_string(line) + ": " + reason), line(line) {}
  int line;
};

struct InvariantViolation : Error {
  InvariantViolation(const std::string& entity, const std::string& field,
                     const std::string& reason)
      : Error(entity + ": field '" + field + "': " + reason),
        entity(entity),
        field(field) {}
  std::string entity;
  std::string field;
};

/// A square-root argument of the momentum balance went negative: the requested
/// ray direction does not propagate (sin(theta) exceeds the refractive index).
struct EvanescentBranch : Error {
  using Error::Error;
};

struct NonFiniteAmplitude : Error {
  using Error::Error;
};

struct MismatchedStates : Error {
  using Error::Error;
};

struct MismatchedConfig : Error {
  using Error::Error;
};

}  // namespace pdc
