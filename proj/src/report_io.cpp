// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "pdc/ensemble.hpp"

namespace pdc {

namespace {

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string report_to_text(const EnsembleReport& r) {
  std::ostringstream out;
  out << "scenario=" << scenario_name(r.scenario) << "\n";
  out << "trials=" << r.trials << "\n";
  out << "seed=" << r.seed << "\n";
  out << "pump_amplitude=" << g6(r.pump_amplitude) << "\n";
  out << "kappa=" << g6(r.kappa) << "\n";
  out << "depth=" << g6(r.depth) << "\n";
  out << "step_size=" << g6(r.step_size) << "\n";
  out << "detection_threshold=" << g6(r.detection_threshold) << "\n";
  for (std::size_t m = 0; m < r.modes.size(); ++m) {
    const ModeStats& ms = r.modes[m];
    const std::string p = "mode" + std::to_string(m) + ".";
    out << p << "label=" << ms.label << "\n";
    out << p << "role=" << (ms.is_laser ? "laser" : "vacuum") << "\n";
    out << p << "mean_delta_intensity=" << g6(ms.mean_delta_intensity) << "\n";
    out << p << "std_error=" << g6(ms.std_error) << "\n";
    out << p << "detection_rate=" << g6(ms.detection_rate) << "\n";
  }
  out << "dark_rate=" << g6(r.dark_rate) << "\n";
  return out.str();
}

std::string report_to_json(const EnsembleReport& r) {
  nlohmann::json j;
  j["schema"] = "pdcsim-ensemble-report/1";
  j["scenario"] = scenario_name(r.scenario);
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["config"] = {{"pump_amplitude", r.pump_amplitude},
                 {"kappa", r.kappa},
                 {"depth", r.depth},
                 {"step_size", r.step_size},
                 {"detection_threshold", r.detection_threshold}};
  j["modes"] = nlohmann::json::array();
  for (const ModeStats& ms : r.modes) {
    j["modes"].push_back({{"label", ms.label},
                          {"wavelength_nm", ms.wavelength_nm},
                          {"polarization", std::string(1, polarization_tag(ms.polarization))},
                          {"role", ms.is_laser ? "laser" : "vacuum"},
                          {"mean_delta_intensity", ms.mean_delta_intensity},
                          {"std_error", ms.std_error},
                          {"detection_rate", ms.detection_rate}});
  }
  j["dark_rate"] = r.dark_rate;
  return j.dump(2) + "\n";
}

}  // namespace pdc
