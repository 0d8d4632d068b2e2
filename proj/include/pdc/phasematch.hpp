// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#pragma once

#include <variant>
#include <vector>

#include "pdc/dispersion.hpp"

namespace pdc {

/// A phase-matched triple. The pump propagates along the axis; signal and
/// idler leave on opposite sides of it at their external angles.
///
/// Frequencies are first-class: omega_idler is constructed as
/// omega_pump - omega_signal, so conservation holds to the last bit of the
/// subtraction; the idler wavelength is derived from it for reporting.
struct PhaseMatchSolution {
  ModeSpec pump;    // external_angle_deg == 0
  ModeSpec signal;
  ModeSpec idler;
  double omega_pump = 0.0;    // rad/fs
  double omega_signal = 0.0;
  double omega_idler = 0.0;
  double sin2_theta1 = 0.0;   // squared sine of the signal's external angle
  double residual_eq1 = 0.0;  // relative momentum-balance residual, ~1e-16
};

/// Carried by sweeps and solvers when the momentum balance has no propagating
/// solution; holds the offending squared sines (negative or above 1).
struct NoSolution {
  double sin2_theta1 = 0.0;
  double sin2_theta2 = 0.0;
};

using PhaseMatchOutcome = std::variant<PhaseMatchSolution, NoSolution>;

inline bool has_solution(const PhaseMatchOutcome& o) {
  return std::holds_alternative<PhaseMatchSolution>(o);
}

/// Solves the collinear-pump momentum balance for the signal's external angle.
///
/// The balance along the pump axis, with hbar cancelled and theta the external
/// angle, reads
///
///   w1*sqrt(n1^2 - sin^2(t1)) + sqrt(w2^2*n2^2 - w1^2*sin^2(t1)) = w0*n0,
///
/// whose closed form is
///
///   w1^2 sin^2(t1) = -n0^2 w0^2/4 + (n1^2 w1^2 + n2^2 w2^2)/2
///                    - (n1^2 w1^2 - n2^2 w2^2)^2 / (4 n0^2 w0^2).
///
/// The idler direction follows from transverse momentum conservation,
/// w1 sin(t1) = w2 sin(t2). Signal and idler are ordinary rays; the pump sees
/// index_for (effective extraordinary index at the crystal cut when polarized
/// extraordinary). The pump must be on axis and the signal below the pump
/// frequency. An ordinary-polarized pump is accepted and, in a crystal with
/// normal dispersion, yields NoSolution at every signal wavelength.
PhaseMatchOutcome signal_angle(const CrystalDispersion& crystal, const ModeSpec& pump,
                               double signal_wavelength_nm);

/// Relative residual (LHS - RHS)/RHS of the momentum balance above for an
/// arbitrary triple; zero iff phase matched. Only the signal's angle enters
/// (the idler supplies its frequency and index). Throws EvanescentBranch if a
/// square-root argument is negative.
double eq1_residual(const CrystalDispersion& crystal, const ModeSpec& pump,
                    const ModeSpec& signal, const ModeSpec& idler);

struct RainbowPoint {
  double signal_wavelength_nm = 0.0;
  double signal_angle_deg = 0.0;
  double idler_wavelength_nm = 0.0;
  double idler_angle_deg = 0.0;
};

struct RainbowGap {
  double signal_wavelength_nm = 0.0;
  double sin2_theta1 = 0.0;  // the failing closed-form value
};

struct RainbowSweep {
  std::vector<RainbowPoint> points;  // ordered by signal wavelength
  std::vector<RainbowGap> gaps;      // ordered by signal wavelength
};

RainbowSweep rainbow_sweep(const CrystalDispersion& crystal, const ModeSpec& pump,
                           const std::vector<double>& wavelength_grid_nm);

/// Satellite (up-conversion) geometry: an ordinary on-axis pump couples to a
/// higher-frequency extraordinary vacuum mode ("partner"); the detectable
/// outgoing ray carries the difference frequency, below the pump.
///
/// The triple solves the same momentum balance with the partner in the
/// role of the axis mode; all angles are then re-expressed relative to the
/// physical pump by (external) angle arithmetic in the plane.
struct PucSolution {
  ModeSpec pump;      // ordinary, external_angle_deg == 0
  ModeSpec partner;   // extraordinary vacuum mode, angle to the pump axis
  ModeSpec outgoing;  // ordinary detectable ray, angle to the pump axis
  PhaseMatchSolution eq1_triple;  // same geometry with the partner on axis
};

using PucOutcome = std::variant<PucSolution, NoSolution>;

inline bool has_solution(const PucOutcome& o) {
  return std::holds_alternative<PucSolution>(o);
}

PucOutcome puc_match(const CrystalDispersion& crystal, const ModeSpec& pump,
                     double partner_wavelength_nm);

}  // namespace pdc
