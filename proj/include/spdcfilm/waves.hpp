#pragma once

#include <Eigen/Dense>

#include "spdcfilm/medium.hpp"

namespace spdcfilm {

/// z-component of the wave vector for in-plane wave vector q.
/// Branch: Im(kz) >= 0 always (decaying evanescent waves); when Im(kz) = 0
/// within tolerance the root with Re(kz) >= 0 is returned (forward
/// propagation).
Complex kz(const TransverseWaveVector& q, const Medium& medium, double omega);

/// s/p unit polarization vectors at a given q. s_hat is real, lies in the
/// x-y plane and is medium independent; p_hat_up/down are the p vectors of
/// the upward (+kz) and downward (-kz) waves, normalized so that the
/// unconjugated dot product p.p = 1.
///
/// At q = 0 the vectors are defined by the kx -> 0+ axis limit:
/// s_hat = (0,1,0), p_hat_{up,down} = (-/+ kz/k, 0, 0).
struct PolarizationTriad {
  Eigen::Vector3d s_hat;
  Eigen::Vector3cd p_hat_up;
  Eigen::Vector3cd p_hat_down;
};

PolarizationTriad polarization_triad(const TransverseWaveVector& q,
                                     const Medium& medium, double omega);

/// Single-interface Fresnel coefficients from medium i into medium j at
/// fixed q, omega. p_pole flags a vanishing p denominator
/// (kzi*eps_j + kzj*eps_i ~ 0, the surface-plasmon pole).
struct FresnelCoefficients {
  Complex r_s, r_p, t_s, t_p;
  bool p_pole = false;
};

FresnelCoefficients fresnel(const Medium& medium_i, const Medium& medium_j,
                            const TransverseWaveVector& q, double omega);

}  // namespace spdcfilm
