// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#include "pdc/ensemble.hpp"

#include <cmath>

namespace pdc {

std::string scenario_name(Scenario s) {
  return s == Scenario::PDC ? "pdc" : "puc";
}

Scenario scenario_from_name(const std::string& name) {
  if (name == "pdc") return Scenario::PDC;
  if (name == "puc") return Scenario::PUC;
  throw Error("unknown scenario '" + name + "' (expected pdc or puc)");
}

namespace {

int laser_mode_index(Scenario s) {
  return s == Scenario::PDC ? 0 : 1;
}

void validate(const ScenarioConfig& c) {
  if (c.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(c.pump_amplitude > 0.0))
    throw std::invalid_argument("pump_amplitude must be positive");
  if (!(c.detection_threshold >= 0.0))
    throw std::invalid_argument("detection_threshold must be nonnegative");
  if (!(c.kappa >= 0.0)) throw std::invalid_argument("kappa must be nonnegative");
  if (!(c.step_size > 0.0)) throw std::invalid_argument("step_size must be positive");
  if (!(c.depth >= 0.0)) throw std::invalid_argument("depth must be nonnegative");
}

}  // namespace

TrialResult run_single_trial(const ScenarioConfig& config, int trial_index) {
  ZeropointSampler rng(derive_stream_seed(config.seed, trial_index));
  const int laser = laser_mode_index(config.scenario);

  Amplitudes a;
  a[laser] = std::polar(config.pump_amplitude,
                        2.0 * std::numbers::pi * rng.uniform());
  for (int m = 0; m < 3; ++m)
    if (m != laser) a[m] = sample_vacuum_mode(rng);

  ThreeWaveState state = make_three_wave_state(
      a, config.triple.omega_signal, config.triple.omega_idler, config.kappa);

  TrialResult r;
  r.initial = intensities(state);
  const ThreeWaveState out =
      propagate(state, {config.step_size, config.depth});
  r.final_ = intensities(out);
  r.delta = r.final_ - r.initial;
  return r;
}

EnsembleReport run_scenario(const ScenarioConfig& config) {
  validate(config);
  const int laser = laser_mode_index(config.scenario);

  // Welford accumulation in trial order keeps reports deterministic.
  Intensities mean = Intensities::Zero();
  Intensities m2 = Intensities::Zero();
  Eigen::Vector3i detections = Eigen::Vector3i::Zero();
  long dark_hits = 0, dark_draws = 0;

  for (int t = 0; t < config.trials; ++t) {
    TrialResult r;
    try {
      r = run_single_trial(config, t);
    } catch (const NonFiniteAmplitude& e) {
      throw NonFiniteAmplitude("trial " + std::to_string(t) + ": " + e.what());
    } catch (const Error& e) {
      throw Error("trial " + std::to_string(t) + ": " + e.what());
    }
    const Intensities d = r.delta - mean;
    mean += d / double(t + 1);
    m2 += d.cwiseProduct(r.delta - mean);
    for (int m = 0; m < 3; ++m) {
      if (detect(r.final_[m], config.detection_threshold)) ++detections[m];
      if (m != laser) {
        // With the coupling removed propagation is the identity, so the
        // dark rate is the detection rate on the initial vacuum draws.
        if (detect(r.initial[m], config.detection_threshold)) ++dark_hits;
        ++dark_draws;
      }
    }
  }

  EnsembleReport rep;
  rep.scenario = config.scenario;
  rep.trials = config.trials;
  rep.seed = config.seed;
  rep.pump_amplitude = config.pump_amplitude;
  rep.kappa = config.kappa;
  rep.depth = config.depth;
  rep.step_size = config.step_size;
  rep.detection_threshold = config.detection_threshold;
  rep.dark_rate = dark_draws > 0 ? double(dark_hits) / double(dark_draws) : 0.0;

  const ModeSpec* specs[3] = {&config.triple.pump, &config.triple.signal,
                              &config.triple.idler};
  for (int m = 0; m < 3; ++m) {
    ModeStats& ms = rep.modes[m];
    ms.label = mode_label(specs[m]->wavelength_nm, specs[m]->polarization);
    ms.wavelength_nm = specs[m]->wavelength_nm;
    ms.polarization = specs[m]->polarization;
    ms.is_laser = (m == laser);
    ms.mean_delta_intensity = mean[m];
    ms.std_error = config.trials > 1
                       ? std::sqrt(m2[m] / (config.trials - 1) / config.trials)
                       : 0.0;
    ms.detection_rate = double(detections[m]) / double(config.trials);
  }
  return rep;
}

SatelliteRatio satellite_ratio(const EnsembleReport& pdc, const EnsembleReport& puc) {
  if (pdc.scenario != Scenario::PDC || puc.scenario != Scenario::PUC)
    throw MismatchedConfig("satellite_ratio takes a PDC report and a PUC report");
  if (pdc.kappa != puc.kappa || pdc.depth != puc.depth ||
      pdc.pump_amplitude != puc.pump_amplitude || pdc.trials != puc.trials)
    throw MismatchedConfig(
        "reports must share coupling, depth, pump amplitude and trials");

  // The enhanced outgoing mode is the idler-role mode in both runs.
  const double num = puc.modes[2].mean_delta_intensity;
  const double den = pdc.modes[2].mean_delta_intensity;
  if (den == 0.0) {
    if (num == 0.0) return {0.0, 0.0};  // no coupling in either run
    throw Error("main-process intensity change is exactly zero; ratio undefined");
  }
  const double ratio = std::abs(num) / std::abs(den);
  const double rel_num = num != 0.0 ? puc.modes[2].std_error / num : 0.0;
  const double rel_den = pdc.modes[2].std_error / den;
  const double se =
      num != 0.0 ? ratio * std::sqrt(rel_num * rel_num + rel_den * rel_den)
                 : puc.modes[2].std_error / std::abs(den);
  return {ratio, se};
}

}  // namespace pdc
