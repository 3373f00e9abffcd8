#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spdcfilm/spdc.hpp"

namespace spdcfilm {

struct ScanAxis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  double value(int i) const {
    return count < 2 ? start
                     : start + (stop - start) * static_cast<double>(i) /
                           static_cast<double>(count - 1);
  }
  double step() const {
    return count < 2 ? 0.0 : (stop - start) / static_cast<double>(count - 1);
  }
};

/// Dense grid of rates over one or two axes (row-major, axis1 slowest).
struct ScanGrid {
  ScanAxis axis1;
  std::optional<ScanAxis> axis2;
  std::vector<double> values;

  double at(int i, int j = 0) const {
    const int n2 = axis2 ? axis2->count : 1;
    return values[static_cast<std::size_t>(i * n2 + j)];
  }
};

struct ScanSummary {
  std::optional<double> peak_location;
  std::optional<double> peak_value;
  std::optional<double> fwhm;
  std::optional<double> oscillation_period;
};

/// Unpolarized rate over a (theta_s, phi_s) grid with the idler slaved to
/// theta_i = theta_s, phi_i = phi_s + pi.
ScanGrid phi_symmetric_scan(const JointSetting& base, const ScanAxis& theta_axis,
                            const ScanAxis& phi_axis, int threads = 0);

/// 1D theta profile at the base setting's phi_s (idler slaved).
ScanGrid phi_symmetric_profile(const JointSetting& base, const ScanAxis& theta_axis,
                               int threads = 0);

/// phi-symmetric rate at the base angles versus slab thickness.
ScanGrid thickness_scan(const JointSetting& base, const ScanAxis& a_axis,
                        int threads = 0);

/// Rate over (theta_s, theta_i) at fixed phi_s, phi_i = phi_s + pi.
ScanGrid theta_map(const JointSetting& base, const ScanAxis& theta_s_axis,
                   const ScanAxis& theta_i_axis, int threads = 0);

/// Full width at half maximum of a single-peak 1-axis profile, by linear
/// interpolation to the crossings nearest the peak. Throws
/// IncompleteProfileError when either crossing is not bracketed.
ScanSummary fwhm(const ScanGrid& profile);

/// Mean spacing of local maxima above 20% of the global maximum,
/// considering only axis values beyond min_location. No smoothing.
std::optional<double> extract_period(const ScanGrid& profile, double min_location);

/// Interior propagation angle in the slab from a detection angle in the
/// given outer medium (Snell, real parts of the indices).
double slab_angle(const LayerStack& stack, Role role, double theta_detect,
                  DetectionSide side = DetectionSide::Medium1);

/// Closed-form Fabry-Pérot thickness period
/// da = lambda / (2 n2 cos(theta2)) at the signal wavelength.
double opd_period(const LayerStack& stack, double theta_detect1, double lambda_s);

struct DecayLength {
  double length = 0.0;
  bool infinite = false;
};

/// Pump intensity decay length 1/Im(k2p) in the absorbing slab.
DecayLength decay_length(const Medium& slab_medium_pump, double lambda_p);

struct CoherenceLength {
  double length = 0.0;
  bool infinite = false;
};

/// pi / |dk_parallel| with
/// dk_parallel = Re(k2p) - k2s cos(theta2s) - k2i cos(theta2i).
CoherenceLength coherence_length(const LayerStack& stack, double theta_2s,
                                 double theta_2i, double omega_s, double omega_i,
                                 double omega_p);

/// Transverse-phase-matched idler angle from
/// |sin(theta_s)| = r |n_i/n_s| |sin(theta_i)|. Throws
/// NoPropagatingIdlerError when the required sine exceeds 1.
double idler_angle(double degeneracy_r, double theta_s, double n_s = 1.0,
                   double n_i = 1.0);

}  // namespace spdcfilm
