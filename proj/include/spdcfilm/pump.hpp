#pragma once

#include "spdcfilm/exp_series.hpp"
#include "spdcfilm/greens.hpp"
#include "spdcfilm/medium.hpp"

namespace spdcfilm {

/// Monochromatic pump beam arriving from medium 3, x-polarized at the
/// entry interface z = -a, with a truncated Gaussian angular spectrum.
struct PumpSpec {
  double wavelength_m = 500e-9;
  double amplitude = 1.0;            // arbitrary field units
  double spectral_width_invm = 6.6e5;  // Gaussian width w of U_p(q)

  double omega() const { return 2.0 * pi * c0 / wavelength_m; }
};

/// Angular spectrum U_p(q) = A exp(-q^2/w^2) inside the propagation disk
/// |q| <= k3p of the incidence medium; exactly zero outside.
Complex pump_spectrum(const TransverseWaveVector& q, const PumpSpec& spec,
                      const Medium& medium3_pump);

/// Radius of the truncation disk.
double pump_truncation_radius(const PumpSpec& spec, const Medium& medium3_pump);

/// Pump field right before the entry interface: x-polarized plus the
/// longitudinal z component required by transversality k.E = 0.
/// The measure-zero ring |ky| = k3p (vanishing normalizer) is excluded:
/// the field is returned as zero with on_singular_ring set.
struct InterfaceField {
  Eigen::Vector3cd field = Eigen::Vector3cd::Zero();
  bool on_singular_ring = false;
};

InterfaceField interface_field(const TransverseWaveVector& q, const PumpSpec& spec,
                               const Medium& medium3_pump);

/// s/p amplitudes of the interface field with respect to the medium-3
/// upward triad: field = s_amplitude * s_hat + p_amplitude * p_hat_3up.
/// The kx = 0 singularity of the raw projection formulas is removable and
/// implemented in cancelled form; q = 0 follows the kx -> 0+ axis limit
/// (all amplitude in the p channel).
struct SPDecomposition {
  Complex s_amplitude{0.0, 0.0};
  Complex p_amplitude{0.0, 0.0};
  bool on_singular_ring = false;
};

SPDecomposition sp_decompose(const TransverseWaveVector& q, const PumpSpec& spec,
                             const Medium& medium3_pump);

/// Multiple-reflection transmission coefficients from medium 3 into the
/// slab, per polarization, split into upward (+kz2p) and downward (-kz2p)
/// z-wavenumber terms: Q(q,z) = up.amp*exp(i kz2p z)... evaluated as
/// amplitude * exp(i * kappa * z).
struct PumpQSet {
  TransmissionChannel s;
  TransmissionChannel p;
};

PumpQSet q_coefficients(const TransverseWaveVector& q, double omega_p,
                        const SlabLayers& slab_pump);

/// Pump field inside the slab as a <=4-term vector series in z
/// (cartesian components).
VectorSeries pump_in_slab(const TransverseWaveVector& q, const PumpSpec& spec,
                          const SlabLayers& slab_pump);

/// Direct closed-form evaluation at one z, bypassing the series split.
Eigen::Vector3cd pump_direct(const TransverseWaveVector& q, const PumpSpec& spec,
                             const SlabLayers& slab_pump, double z);

}  // namespace spdcfilm
