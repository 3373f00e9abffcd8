#pragma once

#include <array>

#include "spdcfilm/exp_series.hpp"
#include "spdcfilm/medium.hpp"
#include "spdcfilm/pump.hpp"

namespace spdcfilm {

/// Rank-3 second-order susceptibility (units m/V, scale arbitrary).
class Chi2Tensor {
 public:
  Chi2Tensor() { components_.fill(0.0); }

  /// Zinc-Blende (point group -43m): the six fully off-diagonal
  /// permutations xyz, xzy, yxz, yzx, zxy, zyx equal chi0, all else zero.
  static Chi2Tensor zinc_blende(double chi0);

  double operator()(int a, int b, int g) const {
    return components_[static_cast<std::size_t>((a * 3 + b) * 3 + g)];
  }
  double& operator()(int a, int b, int g) {
    return components_[static_cast<std::size_t>((a * 3 + b) * 3 + g)];
  }

  bool is_zero() const;

 private:
  std::array<double, 27> components_;
};

/// Which outer medium a photon is detected in.
enum class DetectionSide { Medium1 = 1, Medium3 = 3 };

/// One far-field detector: spherical angles (theta measured from the
/// outward normal of the detection half-space), photon frequency, detection
/// medium, and a complex contraction polarization vector.
struct DetectorSetting {
  double theta = 0.0;  // radians, [0, pi/2)
  double phi = 0.0;    // radians
  double omega = 0.0;  // rad/s
  DetectionSide side = DetectionSide::Medium1;
  Eigen::Vector3cd polarization = Eigen::Vector3cd::UnitX();
};

/// Everything needed to evaluate a joint detection: both detectors, the
/// pump, the stack, and the nonlinearity. Energy conservation
/// omega_i = omega_p - omega_s is enforced at construction.
struct JointSetting {
  DetectorSetting signal, idler;
  PumpSpec pump;
  LayerStack stack;
  Chi2Tensor chi2;
};

/// Build a setting from the degeneracy factor r = lambda_s / lambda_i:
/// lambda_s = lambda_p (1+r), lambda_i = lambda_p (1+r)/r.
JointSetting make_joint_setting(const LayerStack& stack, const PumpSpec& pump,
                                const Chi2Tensor& chi2, double degeneracy_r,
                                const DetectorSetting& signal,
                                const DetectorSetting& idler);

/// Slave the idler to the signal: theta_i = theta_s, phi_i = phi_s + pi.
void apply_phi_symmetric(JointSetting& setting);

/// Map a detector direction to its in-plane wave vector
/// q = k_det sin(theta) (cos phi, sin phi) in the detection medium.
TransverseWaveVector detector_q(const DetectorSetting& det, const LayerStack& stack,
                                Role role);

/// Spherical unit vectors at a detection direction, and the rotated
/// transverse basis x' = cos(phi) theta_hat - sin(phi) phi_hat,
/// y' = sin(phi) theta_hat + cos(phi) phi_hat used for H/V projections.
Eigen::Vector3d theta_hat(double theta, double phi, DetectionSide side);
Eigen::Vector3d phi_hat(double phi);
Eigen::Vector3d xprime(double theta, double phi, DetectionSide side);
Eigen::Vector3d yprime(double theta, double phi, DetectionSide side);

/// Core contraction: M(sigma, tau) = Int_{-a}^{0} dz Sum_{a,b,g}
/// chi_{abg} g_{sigma a}(q_s, z) g_{tau b}(q_i, z) E_{p,g}(q_s + q_i, z),
/// evaluated analytically from the exponential series. Zero when the pump
/// spectrum vanishes at q_s + q_i.
Eigen::Matrix3cd jap_matrix(const TransverseWaveVector& q_s,
                            const TransverseWaveVector& q_i,
                            const JointSetting& setting);

/// Joint angular probability amplitude for the configured polarizations.
Complex jap(const TransverseWaveVector& q_s, const TransverseWaveVector& q_i,
            const JointSetting& setting);

/// Independent cross-check of jap: the same integrand evaluated from the
/// closed-form coefficients and integrated with composite Gauss-Legendre
/// panels, refined 64 -> 128 points per panel. Relative disagreement
/// between refinement levels above 1e-6 raises OracleDivergenceError.
Complex jap_quadrature(const TransverseWaveVector& q_s,
                       const TransverseWaveVector& q_i,
                       const JointSetting& setting);

/// Far-field joint detection rate (arbitrary units):
/// n_s n_i (omega_i^3 omega_s^3 / c^6) |jap * kz_det_s * kz_det_i|^2.
double farfield_rate(const JointSetting& setting);

/// Rate summed over the nine cartesian polarization pairs.
double unpolarized_rate(const JointSetting& setting);

/// 2x2 joint amplitude over {H,V}_s x {H,V}_i with H = x', V = y'.
Eigen::Matrix2cd amplitude_matrix(const JointSetting& setting);

}  // namespace spdcfilm
