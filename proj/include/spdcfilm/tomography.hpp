#pragma once

#include <array>
#include <utility>

#include "spdcfilm/analysis.hpp"
#include "spdcfilm/spdc.hpp"

namespace spdcfilm {

/// Single-photon polarization state in the {H, V} basis.
/// Convention: D = (H+V)/sqrt2, A = (H-V)/sqrt2,
///             R = (H-iV)/sqrt2, L = (H+iV)/sqrt2.
struct PolarizationState2 {
  char label = 'H';
  Eigen::Vector2cd ket = Eigen::Vector2cd::UnitX();

  static PolarizationState2 from_label(char label);
};

/// The canonical ordered 16-projection tomographic set.
using TomographicPair = std::pair<PolarizationState2, PolarizationState2>;
const std::array<TomographicPair, 16>& tomographic_states();

/// 4x4 biphoton polarization density matrix, basis order {HH, HV, VH, VV}.
using DensityMatrix4 = Eigen::Matrix4cd;

/// Throws ReconstructionError unless Hermitian (1e-10), unit trace (1e-10)
/// and PSD to -1e-8.
void validate_density_matrix(const DensityMatrix4& rho);

/// Coincidence rate with both analyzers projecting onto the given states.
/// The contraction vector entering the rate is the conjugated ket expressed
/// in the x'/y' transverse basis of each detector, so that the rate is the
/// squared overlap of the measured state with the biphoton amplitude.
double projection_rate(const JointSetting& setting, const TomographicPair& pair);

struct TomographyRecord {
  struct Entry {
    char state_s, state_i;
    double rate;
  };
  std::array<Entry, 16> entries;
};

/// All 16 projection rates at the configured detector angles.
TomographyRecord measure_tomography(const JointSetting& setting);

/// Linear inversion of the 16 rates against the fixed dual basis of the
/// projection set; output normalized to unit trace. Throws
/// UndefinedStateError on an all-zero record and ReconstructionError when
/// the result violates density-matrix invariants.
DensityMatrix4 reconstruct_rho(const TomographyRecord& record);

/// Direct pure-state density matrix: the vectorized, normalized amplitude
/// matrix psi with rho = psi psi^dagger. Throws UndefinedStateError when
/// the amplitude matrix vanishes.
DensityMatrix4 rho_direct(const JointSetting& setting);

/// Schmidt number K = 1 / Tr(rho_reduced^2); 1 for product states, 2 for
/// maximally entangled two-qubit states.
double schmidt_number(const DensityMatrix4& rho);

/// K and rate over an idler-angle grid at fixed signal detector.
/// Grid points with vanishing amplitude are recorded as NaN in the K grid.
struct SchmidtMap {
  ScanGrid k_grid;
  ScanGrid rate_grid;
  double argmax_k_theta = 0.0, argmax_k_phi = 0.0;
  double argmax_rate_theta = 0.0, argmax_rate_phi = 0.0;
};

SchmidtMap schmidt_map(const JointSetting& base, const ScanAxis& theta_i_axis,
                       const ScanAxis& phi_i_axis, int threads = 0);

}  // namespace spdcfilm
