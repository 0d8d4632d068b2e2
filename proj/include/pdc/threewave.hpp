// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "pdc/errors.hpp"

namespace pdc {

using Amplitudes = Eigen::Vector3cd;
using Intensities = Eigen::Vector3d;

/// Three coupled mode amplitudes in photon-flux normalization (|a_i|^2 is
/// power over omega_i), evolving along a dimensionless propagation depth zeta:
///
///   da0/dz = -i k a1 a2 exp(-i d z)
///   da1/dz = -i k a0 conj(a2) exp(+i d z)
///   da2/dz = -i k a0 conj(a1) exp(+i d z)
///
/// with coupling k = kappa and phase mismatch d = delta_k per unit depth.
/// Mode 0 is the highest-frequency mode: omega0 = omega1 + omega2.
struct ThreeWaveState {
  Amplitudes a = Amplitudes::Zero();
  double omega0 = 0.0, omega1 = 0.0, omega2 = 0.0;  // rad/fs
  double kappa = 0.0;
  double delta_k = 0.0;
  double zeta = 0.0;
};

/// Builds a state with omega0 = omega1 + omega2 taken exactly from the sum.
ThreeWaveState make_three_wave_state(const Amplitudes& a, double omega1,
                                     double omega2, double kappa,
                                     double delta_k = 0.0);

struct PropagationConfig {
  enum class Integrator { RK4 };
  double step_size = 1e-3;
  double total_depth = 1.0;  // may be negative: propagates backwards
  Integrator integrator = Integrator::RK4;
};

/// Advances the state by total_depth with fixed-step RK4. Deterministic.
/// Throws NonFiniteAmplitude when an amplitude diverges (step size too large).
ThreeWaveState propagate(const ThreeWaveState& state, const PropagationConfig& config);

inline Intensities intensities(const ThreeWaveState& s) {
  return s.a.cwiseAbs2();
}

/// The combinations (N1 - N2, N1 + N0, N2 + N0), N_i = |a_i|^2, conserved
/// exactly by the coupled equations in this normalization.
inline Intensities manley_rowe_invariants(const ThreeWaveState& s) {
  const Intensities n = intensities(s);
  return {n[1] - n[2], n[1] + n[0], n[2] + n[0]};
}

/// Frequency-weighted intensity sum, conserved along propagation.
inline double total_energy(const ThreeWaveState& s) {
  const Intensities n = intensities(s);
  return s.omega0 * n[0] + s.omega1 * n[1] + s.omega2 * n[2];
}

/// Signed per-mode intensity changes between two states of the same triple.
/// Throws MismatchedStates if frequencies or coupling differ.
Intensities gain_signature(const ThreeWaveState& initial, const ThreeWaveState& final_state);

}  // namespace pdc
