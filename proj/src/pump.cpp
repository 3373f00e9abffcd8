#include "spdcfilm/pump.hpp"

#include "spdcfilm/errors.hpp"

namespace spdcfilm {

double pump_truncation_radius(const PumpSpec& spec, const Medium& medium3_pump) {
  return medium3_pump.wavenumber(spec.omega()).real();
}

Complex pump_spectrum(const TransverseWaveVector& q, const PumpSpec& spec,
                      const Medium& medium3_pump) {
  const double k3p = pump_truncation_radius(spec, medium3_pump);
  const double q2 = q.squaredNorm();
  if (q2 > k3p * k3p) return {0.0, 0.0};
  const double w = spec.spectral_width_invm;
  return {spec.amplitude * std::exp(-q2 / (w * w)), 0.0};
}

InterfaceField interface_field(const TransverseWaveVector& q, const PumpSpec& spec,
                               const Medium& medium3_pump) {
  InterfaceField out;
  const Complex u = pump_spectrum(q, spec, medium3_pump);
  if (u == 0.0) return out;

  const double omega = spec.omega();
  const Complex k3p = medium3_pump.wavenumber(omega);
  const Complex kz3p = kz(q, medium3_pump, omega);
  const Complex norm2 = k3p * k3p - Complex(q.ky * q.ky, 0.0);
  if (std::abs(norm2) < 1e-24 * std::abs(k3p * k3p)) {
    out.on_singular_ring = true;
    return out;
  }
  const Complex norm = std::sqrt(norm2);
  out.field = Eigen::Vector3cd(u * kz3p / norm, 0.0, -u * q.kx / norm);
  return out;
}

SPDecomposition sp_decompose(const TransverseWaveVector& q, const PumpSpec& spec,
                             const Medium& medium3_pump) {
  SPDecomposition out;
  const Complex u = pump_spectrum(q, spec, medium3_pump);
  if (u == 0.0) return out;

  const double omega = spec.omega();
  const Complex k3p = medium3_pump.wavenumber(omega);
  const Complex kz3p = kz(q, medium3_pump, omega);
  const Complex norm2 = k3p * k3p - Complex(q.ky * q.ky, 0.0);
  if (std::abs(norm2) < 1e-24 * std::abs(k3p * k3p)) {
    out.on_singular_ring = true;
    return out;
  }
  const Complex norm = std::sqrt(norm2);

  const double qn = q.norm();
  if (qn == 0.0) {
    // kx -> 0+ axis limit: p_hat_3up -> -x_hat, pure x-polarized field.
    out.p_amplitude = -u;
    return out;
  }
  // E_z = -U kx / norm; the kx factors cancel analytically in the s channel.
  out.s_amplitude = -u * kz3p * q.ky / (qn * norm);
  out.p_amplitude = -u * k3p * q.kx / (qn * norm);
  return out;
}

PumpQSet q_coefficients(const TransverseWaveVector& q, double omega_p,
                        const SlabLayers& slab_pump) {
  const double a = slab_pump.thickness_a;
  const Complex kz2p = kz(q, slab_pump.medium2, omega_p);
  const auto f32 = fresnel(slab_pump.medium3, slab_pump.medium2, q, omega_p);
  const auto f21 = fresnel(slab_pump.medium2, slab_pump.medium1, q, omega_p);
  const auto f23 = fresnel(slab_pump.medium2, slab_pump.medium3, q, omega_p);

  PumpQSet set;
  const Complex phase_a = std::exp(iu * kz2p * a);
  for (Pol pol : {Pol::S, Pol::P}) {
    const Complex t32 = pol == Pol::S ? f32.t_s : f32.t_p;
    const Complex r21 = pol == Pol::S ? f21.r_s : f21.r_p;
    const Complex r23 = pol == Pol::S ? f23.r_s : f23.r_p;
    const Complex loop = r23 * r21 * std::exp(iu * kz2p * (2.0 * a));
    const Complex den = 1.0 - loop;
    if (std::abs(den) < 1e-12 * std::abs(r23 * r21))
      throw ResonancePoleError(q.norm(), omega_p, a);
    TransmissionChannel c;
    c.denominator = den;
    c.up = {t32 * phase_a / den, kz2p};          // exp(i kz2p (a+z))
    c.down = {t32 * r21 * phase_a / den, -kz2p}; // r21 exp(i kz2p (a-z))
    (pol == Pol::S ? set.s : set.p) = c;
  }
  return set;
}

VectorSeries pump_in_slab(const TransverseWaveVector& q, const PumpSpec& spec,
                          const SlabLayers& slab_pump) {
  VectorSeries series;
  const auto spd = sp_decompose(q, spec, slab_pump.medium3);
  if (spd.on_singular_ring ||
      (spd.s_amplitude == 0.0 && spd.p_amplitude == 0.0))
    return series;

  const double omega = spec.omega();
  const auto qs = q_coefficients(q, omega, slab_pump);
  const auto tri2 = polarization_triad(q, slab_pump.medium2, omega);
  const Eigen::Vector3cd s = tri2.s_hat.cast<Complex>();

  series.terms.reserve(4);
  series.terms.push_back({spd.s_amplitude * qs.s.up.amplitude * s, qs.s.up.kappa});
  series.terms.push_back({spd.s_amplitude * qs.s.down.amplitude * s, qs.s.down.kappa});
  series.terms.push_back(
      {spd.p_amplitude * qs.p.up.amplitude * tri2.p_hat_up, qs.p.up.kappa});
  series.terms.push_back(
      {spd.p_amplitude * qs.p.down.amplitude * tri2.p_hat_down, qs.p.down.kappa});
  return series;
}

Eigen::Vector3cd pump_direct(const TransverseWaveVector& q, const PumpSpec& spec,
                             const SlabLayers& slab_pump, double z) {
  const auto spd = sp_decompose(q, spec, slab_pump.medium3);
  if (spd.on_singular_ring ||
      (spd.s_amplitude == 0.0 && spd.p_amplitude == 0.0))
    return Eigen::Vector3cd::Zero();

  const double omega = spec.omega();
  const double a = slab_pump.thickness_a;
  const Complex kz2p = kz(q, slab_pump.medium2, omega);
  const auto f32 = fresnel(slab_pump.medium3, slab_pump.medium2, q, omega);
  const auto f21 = fresnel(slab_pump.medium2, slab_pump.medium1, q, omega);
  const auto f23 = fresnel(slab_pump.medium2, slab_pump.medium3, q, omega);
  const auto tri2 = polarization_triad(q, slab_pump.medium2, omega);

  const Complex den_s = 1.0 - f23.r_s * f21.r_s * std::exp(iu * kz2p * (2.0 * a));
  const Complex den_p = 1.0 - f23.r_p * f21.r_p * std::exp(iu * kz2p * (2.0 * a));

  const Complex q_s = f32.t_s * std::exp(iu * kz2p * (a + z)) *
                      (1.0 + f21.r_s * std::exp(-iu * kz2p * (2.0 * z))) / den_s;
  const Complex q_p_up = f32.t_p * std::exp(iu * kz2p * (a + z)) / den_p;
  const Complex q_p_down = f32.t_p * f21.r_p * std::exp(iu * kz2p * (a - z)) / den_p;

  return spd.s_amplitude * q_s * tri2.s_hat.cast<Complex>() +
         spd.p_amplitude * (q_p_up * tri2.p_hat_up + q_p_down * tri2.p_hat_down);
}

}  // namespace spdcfilm
