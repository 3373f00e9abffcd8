#pragma once

#include <map>
#include <string>
#include <vector>

#include "spdcfilm/medium.hpp"

namespace spdcfilm {

/// Tabulated permittivity vs wavelength. Lookups interpolate linearly in
/// wavelength; outside the tabulated range the nearest endpoint is returned
/// and the sample is flagged as extrapolated.
struct DispersionTable {
  std::vector<double> wavelength_m;  // strictly increasing
  std::vector<Complex> epsilon;

  bool empty() const { return wavelength_m.empty(); }
};

struct MaterialSample {
  Medium medium;
  bool extrapolated = false;
};

/// Immutable-after-load registry of named materials.
class MaterialTable {
 public:
  /// The built-in materials: GaAs, SiO2, air, vacuum.
  static const MaterialTable& builtin();

  /// Parse a dispersion file: two or three whitespace-separated columns
  /// (wavelength_m, eps_real[, eps_imag]); '#' starts a comment; wavelengths
  /// must be strictly increasing.
  static DispersionTable parse_dispersion_file(const std::string& path);

  void add(const std::string& name, DispersionTable table);
  void load_dispersion_file(const std::string& name, const std::string& path);

  bool has(const std::string& name) const;
  MaterialSample lookup(const std::string& name, double wavelength_m) const;

 private:
  std::map<std::string, DispersionTable> tables_;
};

/// Lookup against the built-in table.
MaterialSample material_lookup(const std::string& name, double wavelength_m);

}  // namespace spdcfilm
