#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spdcfilm/analysis.hpp"
#include "spdcfilm/spdc.hpp"

namespace spdcfilm {

enum class ScanType {
  Rate,
  PhiSymmetric,
  Thickness,
  ThetaMap,
  Tomography,
  SchmidtMap,
  WavelengthSweep,
};

std::string to_string(ScanType t);
std::optional<ScanType> scan_type_from_string(const std::string& s);

/// Flat key-value config text: [section] headers, key = value lines,
/// '#' comments. Keys are stored as "section.key".
using KeyValueMap = std::map<std::string, std::string>;
KeyValueMap parse_config_file(const std::string& path);
KeyValueMap parse_config_text(const std::string& text);

/// Aggregated validation failure (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// A fully resolved run: stack, pump, detection and scan parameters.
struct RunConfig {
  ScanType scan = ScanType::Rate;

  LayerStack stack;
  PumpSpec pump;
  double chi0 = 1.0;
  double degeneracy_r = 1.0;

  double theta_s_deg = 45.0, phi_s_deg = 0.0;
  double theta_i_deg = 45.0, phi_i_deg = 180.0;
  DetectionSide side_s = DetectionSide::Medium1;
  DetectionSide side_i = DetectionSide::Medium1;
  std::optional<char> polarization_s, polarization_i;

  ScanAxis axis1, axis2;  // resolved per scan type; axis2 may be unused
  bool has_axis2 = false;

  std::string out_dir = ".";
  int threads = 0;

  /// The resolved key-value view, echoed into the result envelope.
  KeyValueMap echo;
};

/// Fill defaults, check ranges, resolve materials. All failures are
/// aggregated into a single ConfigError.
RunConfig validate(const KeyValueMap& raw);

/// Build the engine setting for a resolved config.
JointSetting make_setting(const RunConfig& cfg);

}  // namespace spdcfilm
