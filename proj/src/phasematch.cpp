// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#include "pdc/phasematch.hpp"

#include <algorithm>
#include <cmath>

namespace pdc {

namespace {

void require_on_axis_pump(const ModeSpec& pump) {
  if (pump.external_angle_deg != 0.0)
    throw std::invalid_argument("pump must propagate on axis (external angle 0)");
  if (!(pump.wavelength_nm > 0.0))
    throw std::invalid_argument("pump wavelength must be positive");
}

}  // namespace

PhaseMatchOutcome signal_angle(const CrystalDispersion& crystal, const ModeSpec& pump,
                               double signal_wavelength_nm) {
  require_on_axis_pump(pump);
  if (!(signal_wavelength_nm > pump.wavelength_nm))
    throw std::invalid_argument(
        "signal wavelength must exceed the pump wavelength (w1 < w0)");

  const double w0 = pump.omega();
  const double w1 = angular_frequency(signal_wavelength_nm);
  const double w2 = w0 - w1;  // idler frequency, exact by construction
  const double idler_wavelength_nm = wavelength_from_frequency(w2);

  const double n0 = index_for(crystal, pump);
  const double n1 = index_ordinary(crystal, signal_wavelength_nm);
  const double n2 = index_ordinary(crystal, idler_wavelength_nm);

  const double a = n1 * n1 * w1 * w1;
  const double b = n2 * n2 * w2 * w2;
  const double P = n0 * n0 * w0 * w0;

  const double u2 = -0.25 * P + 0.5 * (a + b) - 0.25 * (a - b) * (a - b) / P;
  const double sin2_t1 = u2 / (w1 * w1);
  const double sin2_t2 = u2 / (w2 * w2);
  if (!(sin2_t1 >= 0.0 && sin2_t1 <= 1.0 && sin2_t2 <= 1.0))
    return NoSolution{sin2_t1, sin2_t2};

  PhaseMatchSolution sol;
  sol.pump = pump;
  sol.signal = {signal_wavelength_nm, Polarization::Ordinary,
                rad_to_deg(std::asin(std::sqrt(sin2_t1)))};
  sol.idler = {idler_wavelength_nm, Polarization::Ordinary,
               rad_to_deg(std::asin(std::sqrt(sin2_t2)))};
  sol.omega_pump = w0;
  sol.omega_signal = w1;
  sol.omega_idler = w2;
  sol.sin2_theta1 = sin2_t1;
  sol.residual_eq1 = eq1_residual(crystal, sol.pump, sol.signal, sol.idler);
  return sol;
}

double eq1_residual(const CrystalDispersion& crystal, const ModeSpec& pump,
                    const ModeSpec& signal, const ModeSpec& idler) {
  require_on_axis_pump(pump);
  const double w0 = pump.omega();
  const double w1 = signal.omega();
  const double w2 = idler.omega();

  const double n0 = index_for(crystal, pump);
  const double n1 = index_for(crystal, signal);
  const double n2 = index_for(crystal, idler);

  const double s1 = std::sin(deg_to_rad(signal.external_angle_deg));
  const double arg1 = n1 * n1 - s1 * s1;
  const double arg2 = w2 * w2 * n2 * n2 - w1 * w1 * s1 * s1;
  if (arg1 < 0.0 || arg2 < 0.0)
    throw EvanescentBranch("sin(theta1) exceeds the signal index: no propagating ray");

  const double lhs = w1 * std::sqrt(arg1) + std::sqrt(arg2);
  const double rhs = w0 * n0;
  return (lhs - rhs) / rhs;
}

RainbowSweep rainbow_sweep(const CrystalDispersion& crystal, const ModeSpec& pump,
                           const std::vector<double>& wavelength_grid_nm) {
  std::vector<double> grid = wavelength_grid_nm;
  std::sort(grid.begin(), grid.end());

  RainbowSweep sweep;
  for (double lam : grid) {
    PhaseMatchOutcome out = signal_angle(crystal, pump, lam);
    if (const auto* sol = std::get_if<PhaseMatchSolution>(&out)) {
      sweep.points.push_back({lam, sol->signal.external_angle_deg,
                              sol->idler.wavelength_nm,
                              sol->idler.external_angle_deg});
    } else {
      sweep.gaps.push_back({lam, std::get<NoSolution>(out).sin2_theta1});
    }
  }
  return sweep;
}

PucOutcome puc_match(const CrystalDispersion& crystal, const ModeSpec& pump,
                     double partner_wavelength_nm) {
  require_on_axis_pump(pump);
  if (pump.polarization != Polarization::Ordinary)
    throw std::invalid_argument("satellite geometry needs an ordinary-polarized pump");
  if (!(partner_wavelength_nm > 0.0) ||
      !(partner_wavelength_nm < pump.wavelength_nm))
    throw std::invalid_argument(
        "partner wavelength must be positive and below the pump wavelength");

  // Same triple, roles reassigned: the extraordinary partner takes the axis
  // role, the physical pump the signal role; the outgoing ray is the idler.
  const ModeSpec axis_mode{partner_wavelength_nm, Polarization::Extraordinary, 0.0};
  PhaseMatchOutcome out = signal_angle(crystal, axis_mode, pump.wavelength_nm);
  if (const auto* gap = std::get_if<NoSolution>(&out)) return *gap;

  const auto& triple = std::get<PhaseMatchSolution>(out);
  const double pump_angle = triple.signal.external_angle_deg;  // pump vs partner
  const double outgoing_angle = pump_angle + triple.idler.external_angle_deg;
  if (outgoing_angle >= 90.0)
    return NoSolution{triple.sin2_theta1,
                      std::pow(std::sin(deg_to_rad(outgoing_angle)), 2)};

  PucSolution sol;
  sol.pump = pump;
  sol.partner = {partner_wavelength_nm, Polarization::Extraordinary, pump_angle};
  sol.outgoing = {triple.idler.wavelength_nm, Polarization::Ordinary, outgoing_angle};
  sol.eq1_triple = triple;
  return sol;
}

}  // namespace pdc
