// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pdc/errors.hpp"
#include "pdc/types.hpp"

namespace pdc {

/// Algebraic form of a refractive-index fit. Coefficients are dimensionless
/// or um^2-valued; fits evaluate with the wavelength converted to um.
enum class SellmeierForm {
  /// n^2 = c0 + c1/(L - c2) + c3*L/(L - c4), with L = lambda_um^2.
  /// Five coefficients: one UV pole and one IR pole.
  TwoPole,
};

SellmeierForm sellmeier_form_from_name(const std::string& name);
std::string sellmeier_form_name(SellmeierForm form);

struct SellmeierFit {
  SellmeierForm form = SellmeierForm::TwoPole;
  std::vector<double> coefficients;
  double min_wavelength_nm = 0.0;
  double max_wavelength_nm = 0.0;

  bool in_range(double wavelength_nm) const {
    return wavelength_nm >= min_wavelength_nm && wavelength_nm <= max_wavelength_nm;
  }

  /// Refractive index at a vacuum wavelength inside the validity window.
  /// Throws OutOfRangeError outside the window; the fit never extrapolates.
  double index(double wavelength_nm) const;
};

/// A named uniaxial crystal: principal ordinary and extraordinary index fits
/// plus the cut angle between the pump propagation axis and the optic axis.
struct CrystalDispersion {
  std::string name;
  SellmeierFit ordinary;
  SellmeierFit extraordinary;  // principal value (propagation normal to the optic axis)
  double optic_axis_cut_deg = 90.0;
};

double index_ordinary(const CrystalDispersion& crystal, double wavelength_nm);

/// Effective extraordinary index for propagation at theta_to_axis degrees from
/// the optic axis: n_e(theta) = [cos^2(theta)/n_o^2 + sin^2(theta)/n_e^2]^(-1/2).
/// At theta = 0 this equals the ordinary index; at 90 deg the principal value.
double index_extraordinary_effective(const CrystalDispersion& crystal,
                                     double wavelength_nm, double theta_to_axis_deg);

/// Index seen by a mode: ordinary rays use index_ordinary; extraordinary rays
/// use the effective index at the crystal's optic_axis_cut_deg. The small
/// angular spread of the rays around the pump axis is neglected.
double index_for(const CrystalDispersion& crystal, const ModeSpec& mode);

/// Checks the crystal's physical invariants (coefficient counts, 0 <= cut <= 90,
/// 1 < n < 3 across the validity window for both fits). Throws InvariantViolation
/// naming the offending field.
void validate_crystal(const CrystalDispersion& crystal);

/// Loads all entries from a crystal database file (see data/crystals.txt for
/// the format). Throws ParseError with a line number on malformed input and
/// InvariantViolation on physically invalid entries. An empty file yields an
/// empty list.
std::vector<CrystalDispersion> load_crystal_database(const std::string& path);
std::vector<CrystalDispersion> parse_crystal_database(std::istream& in,
                                                      const std::string& origin);

/// Writes a database that reloads to bit-identical coefficient values.
void save_crystal_database(const std::vector<CrystalDispersion>& crystals,
                           const std::string& path);
std::string format_crystal_database(const std::vector<CrystalDispersion>& crystals);

const CrystalDispersion& find_crystal(const std::vector<CrystalDispersion>& crystals,
                                      const std::string& name);

}  // namespace pdc
