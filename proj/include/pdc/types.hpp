// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#pragma once

#include <cmath>
#include <numbers>
#include <string>

namespace pdc {

/// Vacuum speed of light in nm/fs. Wavelengths are vacuum wavelengths in nm
/// throughout the public API; angular frequencies are rad/fs.
inline constexpr double kSpeedOfLight = 299.792458;

enum class Polarization { Ordinary, Extraordinary };

inline char polarization_tag(Polarization p) {
  return p == Polarization::Ordinary ? 'o' : 'e';
}

inline double angular_frequency(double wavelength_nm) {
  return 2.0 * std::numbers::pi * kSpeedOfLight / wavelength_nm;
}

inline double wavelength_from_frequency(double omega_rad_fs) {
  return 2.0 * std::numbers::pi * kSpeedOfLight / omega_rad_fs;
}

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// One optical mode of the field: vacuum wavelength, polarization inside the
/// crystal, and the external (vacuum) angle of its ray to the pump axis.
///
/// All angles in this library are external angles: the direction of the ray
/// in vacuum after leaving the crystal through a face normal to the pump.
struct ModeSpec {
  double wavelength_nm = 0.0;
  Polarization polarization = Polarization::Ordinary;
  double external_angle_deg = 0.0;

  double omega() const { return angular_frequency(wavelength_nm); }
};

/// Compact "300e" / "450o" style label, used in reports and CLI output.
std::string mode_label(double wavelength_nm, Polarization p);

}  // namespace pdc
