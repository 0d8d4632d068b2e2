// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#include "pdc/dispersion.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pdc {

std::string mode_label(double wavelength_nm, Polarization p) {
  char buf[32];
  double rounded = std::round(wavelength_nm);
  if (std::abs(wavelength_nm - rounded) < 0.05)
    std::snprintf(buf, sizeof buf, "%.0f%c", rounded, polarization_tag(p));
  else
    std::snprintf(buf, sizeof buf, "%.1f%c", wavelength_nm, polarization_tag(p));
  return buf;
}

SellmeierForm sellmeier_form_from_name(const std::string& name) {
  if (name == "twopole") return SellmeierForm::TwoPole;
  throw Error("unknown Sellmeier form '" + name + "'");
}

std::string sellmeier_form_name(SellmeierForm form) {
  switch (form) {
    case SellmeierForm::TwoPole: return "twopole";
  }
  throw Error("unhandled Sellmeier form");
}

double SellmeierFit::index(double wavelength_nm) const {
  if (!in_range(wavelength_nm))
    throw OutOfRangeError(wavelength_nm, min_wavelength_nm, max_wavelength_nm);
  const double um = wavelength_nm * 1e-3;
  const double L = um * um;
  double n2 = 0.0;
  switch (form) {
    case SellmeierForm::TwoPole: {
      const auto& c = coefficients;
      n2 = c[0] + c[1] / (L - c[2]) + c[3] * L / (L - c[4]);
      break;
    }
  }
  if (!(n2 > 0.0) || !std::isfinite(n2))
    throw Error("index fit produced non-physical n^2 = " + std::to_string(n2) +
                " at " + std::to_string(wavelength_nm) + " nm");
  return std::sqrt(n2);
}

double index_ordinary(const CrystalDispersion& crystal, double wavelength_nm) {
  return crystal.ordinary.index(wavelength_nm);
}

double index_extraordinary_effective(const CrystalDispersion& crystal,
                                     double wavelength_nm, double theta_to_axis_deg) {
  const double no = crystal.ordinary.index(wavelength_nm);
  const double ne = crystal.extraordinary.index(wavelength_nm);
  const double t = deg_to_rad(theta_to_axis_deg);
  const double c = std::cos(t), s = std::sin(t);
  return 1.0 / std::sqrt((c * c) / (no * no) + (s * s) / (ne * ne));
}

double index_for(const CrystalDispersion& crystal, const ModeSpec& mode) {
  if (mode.polarization == Polarization::Ordinary)
    return index_ordinary(crystal, mode.wavelength_nm);
  return index_extraordinary_effective(crystal, mode.wavelength_nm,
                                       crystal.optic_axis_cut_deg);
}

namespace {

constexpr std::size_t kTwoPoleCoefficients = 5;
constexpr int kValidationGridPoints = 64;

void check_fit(const std::string& crystal, const std::string& field,
               const SellmeierFit& fit) {
  if (fit.form == SellmeierForm::TwoPole &&
      fit.coefficients.size() != kTwoPoleCoefficients)
    throw InvariantViolation(crystal, field,
                             "twopole form takes 5 coefficients, got " +
                                 std::to_string(fit.coefficients.size()));
  if (!(fit.min_wavelength_nm > 0.0) ||
      !(fit.max_wavelength_nm > fit.min_wavelength_nm))
    throw InvariantViolation(crystal, field, "invalid validity range");
  for (int i = 0; i < kValidationGridPoints; ++i) {
    const double lam = fit.min_wavelength_nm +
                       (fit.max_wavelength_nm - fit.min_wavelength_nm) * i /
                           (kValidationGridPoints - 1);
    double n;
    try {
      n = fit.index(lam);
    } catch (const Error& e) {
      throw InvariantViolation(crystal, field, e.what());
    }
    if (!(n > 1.0 && n < 3.0))
      throw InvariantViolation(crystal, field,
                               "index " + std::to_string(n) + " at " +
                                   std::to_string(lam) +
                                   " nm outside the physical window (1, 3)");
  }
}

}  // namespace

void validate_crystal(const CrystalDispersion& crystal) {
  if (crystal.name.empty())
    throw InvariantViolation("<unnamed>", "name", "empty crystal name");
  check_fit(crystal.name, "ordinary", crystal.ordinary);
  check_fit(crystal.name, "extraordinary", crystal.extraordinary);
  if (!(crystal.optic_axis_cut_deg >= 0.0 && crystal.optic_axis_cut_deg <= 90.0))
    throw InvariantViolation(crystal.name, "optic_axis_cut_deg",
                             "must lie in [0, 90] degrees");
}

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_numbers(const std::string& origin, int line,
                                  std::istringstream& rest) {
  std::vector<double> out;
  std::string tok;
  while (rest >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(origin, line, "expected a number, got '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<CrystalDispersion> parse_crystal_database(std::istream& in,
                                                      const std::string& origin) {
  std::vector<CrystalDispersion> crystals;
  std::string raw;
  int lineno = 0;
  bool header_seen = false;
  bool in_block = false;
  CrystalDispersion current;
  bool have_ordinary = false, have_extraordinary = false, have_range = false,
       have_form = false;
  SellmeierForm block_form = SellmeierForm::TwoPole;
  double range_min = 0.0, range_max = 0.0;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;

    std::istringstream ss(line);
    std::string key;
    ss >> key;

    if (!header_seen) {
      if (key != "format")
        throw ParseError(origin, lineno, "expected 'format <version>' header");
      int version = -1;
      if (!(ss >> version) || version != 1)
        throw ParseError(origin, lineno, "unsupported database format version");
      header_seen = true;
      continue;
    }

    if (key == "crystal") {
      if (in_block)
        throw ParseError(origin, lineno, "nested 'crystal' block (missing 'end'?)");
      current = CrystalDispersion{};
      if (!(ss >> current.name))
        throw ParseError(origin, lineno, "crystal block needs a name");
      in_block = true;
      have_ordinary = have_extraordinary = have_range = have_form = false;
      block_form = SellmeierForm::TwoPole;
      continue;
    }

    if (!in_block)
      throw ParseError(origin, lineno, "'" + key + "' outside a crystal block");

    if (key == "form") {
      std::string name;
      ss >> name;
      try {
        block_form = sellmeier_form_from_name(name);
      } catch (const Error& e) {
        throw ParseError(origin, lineno, e.what());
      }
      have_form = true;
    } else if (key == "ordinary" || key == "extraordinary") {
      auto coeffs = parse_numbers(origin, lineno, ss);
      SellmeierFit& fit =
          key == "ordinary" ? current.ordinary : current.extraordinary;
      fit.coefficients = std::move(coeffs);
      (key == "ordinary" ? have_ordinary : have_extraordinary) = true;
    } else if (key == "valid_range_nm") {
      auto vals = parse_numbers(origin, lineno, ss);
      if (vals.size() != 2)
        throw ParseError(origin, lineno, "valid_range_nm takes two values");
      range_min = vals[0];
      range_max = vals[1];
      have_range = true;
    } else if (key == "optic_axis_cut_deg") {
      auto vals = parse_numbers(origin, lineno, ss);
      if (vals.size() != 1)
        throw ParseError(origin, lineno, "optic_axis_cut_deg takes one value");
      current.optic_axis_cut_deg = vals[0];
    } else if (key == "end") {
      if (!have_form || !have_ordinary || !have_extraordinary || !have_range)
        throw ParseError(origin, lineno,
                         "crystal '" + current.name +
                             "' is missing one of: form, ordinary, "
                             "extraordinary, valid_range_nm");
      for (SellmeierFit* fit : {&current.ordinary, &current.extraordinary}) {
        fit->form = block_form;
        fit->min_wavelength_nm = range_min;
        fit->max_wavelength_nm = range_max;
      }
      validate_crystal(current);
      crystals.push_back(std::move(current));
      in_block = false;
    } else {
      throw ParseError(origin, lineno, "unknown key '" + key + "'");
    }
  }
  if (in_block)
    throw ParseError(origin, lineno, "unterminated crystal block '" + current.name + "'");
  return crystals;
}

std::vector<CrystalDispersion> load_crystal_database(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open crystal database '" + path + "'");
  return parse_crystal_database(in, path);
}

std::string format_crystal_database(const std::vector<CrystalDispersion>& crystals) {
  std::ostringstream out;
  out << "# pdcsim crystal dispersion database\n";
  out << "format 1\n";
  char buf[64];
  for (const auto& c : crystals) {
    out << "\ncrystal " << c.name << "\n";
    out << "form " << sellmeier_form_name(c.ordinary.form) << "\n";
    for (const auto& [key, fit] :
         {std::pair{"ordinary", &c.ordinary}, {"extraordinary", &c.extraordinary}}) {
      out << key;
      for (double v : fit->coefficients) {
        std::snprintf(buf, sizeof buf, " %.17g", v);
        out << buf;
      }
      out << "\n";
    }
    std::snprintf(buf, sizeof buf, "valid_range_nm %.17g %.17g",
                  c.ordinary.min_wavelength_nm, c.ordinary.max_wavelength_nm);
    out << buf << "\n";
    std::snprintf(buf, sizeof buf, "optic_axis_cut_deg %.17g", c.optic_axis_cut_deg);
    out << buf << "\n";
    out << "end\n";
  }
  return out.str();
}

void save_crystal_database(const std::vector<CrystalDispersion>& crystals,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write crystal database '" + path + "'");
  out << format_crystal_database(crystals);
}

const CrystalDispersion& find_crystal(const std::vector<CrystalDispersion>& crystals,
                                      const std::string& name) {
  for (const auto& c : crystals)
    if (c.name == name) return c;
  std::string known;
  for (const auto& c : crystals) {
    if (!known.empty()) known += ", ";
    known += c.name;
  }
  throw Error("crystal '" + name + "' not found (known: " +
              (known.empty() ? "<none>" : known) + ")");
}

}  // namespace pdc
