// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pdc/phasematch.hpp"
#include "pdc/rng.hpp"
#include "pdc/threewave.hpp"

namespace pdc {

enum class Scenario { PDC, PUC };

std::string scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

/// Monte Carlo run configuration. The triple is always the momentum-balance
/// triple (mode 0 = highest frequency); the laser replaces mode 0 in the PDC
/// scenario and the signal-role mode (mode 1) in the PUC scenario, with the
/// remaining modes drawn from the zeropoint distribution at unit mean
/// intensity. Amplitudes and thresholds are in units of the zeropoint scale.
struct ScenarioConfig {
  Scenario scenario = Scenario::PDC;
  double pump_amplitude = 100.0;
  PhaseMatchSolution triple;
  double kappa = 1e-3;
  double depth = 1.0;
  double step_size = 1e-3;
  int trials = 10000;
  std::uint64_t seed = 0;
  double detection_threshold = 1.0;
};

struct ModeStats {
  std::string label;  // e.g. "300e"
  double wavelength_nm = 0.0;
  Polarization polarization = Polarization::Ordinary;
  bool is_laser = false;
  double mean_delta_intensity = 0.0;
  double std_error = 0.0;
  double detection_rate = 0.0;
};

struct EnsembleReport {
  Scenario scenario = Scenario::PDC;
  int trials = 0;
  std::uint64_t seed = 0;
  double pump_amplitude = 0.0;
  double kappa = 0.0;
  double depth = 0.0;
  double step_size = 0.0;
  double detection_threshold = 0.0;
  std::array<ModeStats, 3> modes;  // triple order: (highest-frequency, signal, idler)
  double dark_rate = 0.0;  // vacuum-mode detection rate with the coupling removed
};

/// Threshold detector: fires iff intensity > threshold * zeropoint_mean.
/// Vacuum intensity is exponential with the zeropoint mean, so the no-signal
/// ("dark") rate at threshold T is exp(-T).
inline bool detect(double intensity, double threshold, double zeropoint_mean = 1.0) {
  return intensity > threshold * zeropoint_mean;
}

struct TrialResult {
  Intensities initial = Intensities::Zero();
  Intensities final_ = Intensities::Zero();
  Intensities delta = Intensities::Zero();
};

/// One trial of the ensemble, a pure function of (config, trial_index): the
/// trial's RNG substream is derived from the config seed and the index, so
/// results do not depend on execution order. Draw order within a trial: laser
/// phase, then the vacuum modes in ascending mode index.
TrialResult run_single_trial(const ScenarioConfig& config, int trial_index);

/// Runs the full ensemble, accumulating in trial order. Identical configs
/// produce bit-identical reports. Propagation failures are rethrown with the
/// trial index attached.
EnsembleReport run_scenario(const ScenarioConfig& config);

struct SatelliteRatio {
  double ratio = 0.0;
  double std_error = 0.0;
};

/// |mean intensity change| of the satellite run's enhanced outgoing mode over
/// the same mode's change in the main run, with propagated standard error.
/// Requires matched coupling, depth, pump amplitude and trials; throws
/// MismatchedConfig otherwise.
SatelliteRatio satellite_ratio(const EnsembleReport& pdc, const EnsembleReport& puc);

/// Flat key=value serialization of a report.
std::string report_to_text(const EnsembleReport& report);

/// Structured JSON serialization (schema "pdcsim-ensemble-report/1").
std::string report_to_json(const EnsembleReport& report);

}  // namespace pdc
