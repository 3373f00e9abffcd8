#include "spdcfilm/waves.hpp"

namespace spdcfilm {

Complex kz(const TransverseWaveVector& q, const Medium& medium, double omega) {
  const Complex k = medium.wavenumber(omega);
  Complex w = std::sqrt(k * k - Complex(q.squaredNorm(), 0.0));
  if (w.imag() < 0.0) w = -w;
  // Lossless tie: pick the forward-propagating root.
  if (std::abs(w.imag()) <= 1e-14 * std::abs(w) && w.real() < 0.0) w = -w;
  return w;
}

PolarizationTriad polarization_triad(const TransverseWaveVector& q,
                                     const Medium& medium, double omega) {
  const double qn = q.norm();
  const Complex k = medium.wavenumber(omega);
  const Complex kzv = kz(q, medium, omega);

  double cx = 1.0, cy = 0.0;  // kx -> 0+ axis limit at q = 0
  if (qn > 0.0) {
    cx = q.kx / qn;
    cy = q.ky / qn;
  }

  PolarizationTriad t;
  t.s_hat = Eigen::Vector3d(-cy, cx, 0.0);
  const Complex a = kzv / k;
  const Complex b = qn / k;
  t.p_hat_up = Eigen::Vector3cd(-a * cx, -a * cy, b);
  t.p_hat_down = Eigen::Vector3cd(a * cx, a * cy, b);
  return t;
}

FresnelCoefficients fresnel(const Medium& medium_i, const Medium& medium_j,
                            const TransverseWaveVector& q, double omega) {
  const Complex kzi = kz(q, medium_i, omega);
  const Complex kzj = kz(q, medium_j, omega);
  const Complex ei = medium_i.epsilon;
  const Complex ej = medium_j.epsilon;
  const Complex ni = medium_i.index();
  const Complex nj = medium_j.index();

  FresnelCoefficients f;
  const Complex den_s = kzi + kzj;
  const Complex den_p = kzi * ej + kzj * ei;
  f.p_pole = std::abs(den_p) < 1e-12 * (std::abs(kzi * ej) + std::abs(kzj * ei));

  f.r_s = (kzi - kzj) / den_s;
  f.t_s = 2.0 * kzi / den_s;
  f.r_p = (kzi * ej - kzj * ei) / den_p;
  f.t_p = 2.0 * ni * nj * kzi / den_p;
  return f;
}

}  // namespace spdcfilm
