#pragma once

#include <string>

#include "spdcfilm/config.hpp"

namespace spdcfilm {

/// File-writing failure (CLI exit code 4).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunResult {
  std::string grid_csv;        // paths of the files written
  std::string summary_json;
  std::string tomography_csv;  // tomography scans only
  std::string rho_json;        // tomography scans only
};

/// Execute the configured scan and write grid.csv + summary.json (plus
/// tomography.csv and rho.json for tomography runs) into cfg.out_dir.
/// Identical configs produce byte-identical CSVs; the JSON envelope carries
/// the only timestamp.
RunResult run(const RunConfig& cfg);

}  // namespace spdcfilm
