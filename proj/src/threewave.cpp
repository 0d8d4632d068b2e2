// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#include "pdc/threewave.hpp"

#include <cmath>

namespace pdc {

namespace {

using Complex = std::complex<double>;

// Right-hand side at depth zeta; phase = exp(i * delta_k * zeta).
inline Amplitudes rhs(const Amplitudes& a, double kappa, const Complex& phase) {
  const Complex mi(0.0, -1.0);
  Amplitudes d;
  d[0] = mi * kappa * a[1] * a[2] * std::conj(phase);
  d[1] = mi * kappa * a[0] * std::conj(a[2]) * phase;
  d[2] = mi * kappa * a[0] * std::conj(a[1]) * phase;
  return d;
}

inline Amplitudes rk4_step(const Amplitudes& a, double zeta, double h, double kappa,
                           double delta_k) {
  const bool matched = delta_k == 0.0;
  const Complex one(1.0, 0.0);
  const Complex p0 = matched ? one : Complex(std::polar(1.0, delta_k * zeta));
  const Complex ph = matched ? one : Complex(std::polar(1.0, delta_k * (zeta + 0.5 * h)));
  const Complex p1 = matched ? one : Complex(std::polar(1.0, delta_k * (zeta + h)));

  const Amplitudes k1 = rhs(a, kappa, p0);
  const Amplitudes k2 = rhs(a + 0.5 * h * k1, kappa, ph);
  const Amplitudes k3 = rhs(a + 0.5 * h * k2, kappa, ph);
  const Amplitudes k4 = rhs(a + h * k3, kappa, p1);
  return a + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

ThreeWaveState make_three_wave_state(const Amplitudes& a, double omega1,
                                     double omega2, double kappa, double delta_k) {
  if (!(omega1 > 0.0) || !(omega2 > 0.0))
    throw std::invalid_argument("mode frequencies must be positive");
  if (!(kappa >= 0.0)) throw std::invalid_argument("kappa must be nonnegative");
  ThreeWaveState s;
  s.a = a;
  s.omega1 = omega1;
  s.omega2 = omega2;
  s.omega0 = omega1 + omega2;
  s.kappa = kappa;
  s.delta_k = delta_k;
  return s;
}

ThreeWaveState propagate(const ThreeWaveState& state, const PropagationConfig& config) {
  if (!(config.step_size > 0.0))
    throw std::invalid_argument("step_size must be positive");

  const double depth = config.total_depth;
  const double h = std::copysign(config.step_size, depth);
  const long long full_steps =
      static_cast<long long>(std::floor(std::abs(depth) / config.step_size));
  const double remainder = depth - full_steps * h;

  ThreeWaveState s = state;
  for (long long i = 0; i < full_steps; ++i) {
    s.a = rk4_step(s.a, s.zeta, h, s.kappa, s.delta_k);
    s.zeta += h;
    if (!s.a.allFinite())
      throw NonFiniteAmplitude("amplitude diverged at zeta = " +
                               std::to_string(s.zeta) + "; reduce step_size");
  }
  if (remainder != 0.0) {
    s.a = rk4_step(s.a, s.zeta, remainder, s.kappa, s.delta_k);
    s.zeta += remainder;
    if (!s.a.allFinite())
      throw NonFiniteAmplitude("amplitude diverged at zeta = " +
                               std::to_string(s.zeta) + "; reduce step_size");
  }
  return s;
}

Intensities gain_signature(const ThreeWaveState& initial,
                           const ThreeWaveState& final_state) {
  if (initial.omega0 != final_state.omega0 || initial.omega1 != final_state.omega1 ||
      initial.omega2 != final_state.omega2 || initial.kappa != final_state.kappa)
    throw MismatchedStates("states belong to different triples");
  return intensities(final_state) - intensities(initial);
}

}  // namespace pdc
