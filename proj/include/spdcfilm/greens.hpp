#pragma once

#include "spdcfilm/exp_series.hpp"
#include "spdcfilm/medium.hpp"
#include "spdcfilm/waves.hpp"

namespace spdcfilm {

enum class Pol { S, P };

/// One scalar exponential term: amplitude * exp(i * kappa * z').
struct SeriesTerm {
  Complex amplitude;
  Complex kappa;
};

/// Generalized Fabry-Pérot transmission coefficient of one polarization,
/// split into the upward-generated term (z'-wavenumber -kz2) and the
/// downward-generated term (+kz2). Both share the resonance denominator
/// 1 - r23*r21*exp(2i*kz2*a).
struct TransmissionChannel {
  SeriesTerm up;
  SeriesTerm down;
  Complex denominator;
};

/// Both polarization channels at fixed q, omega.
struct TransmissionSet {
  TransmissionChannel s;
  TransmissionChannel p;
};

/// Slab-to-medium-1 transmission of fields generated at z' inside the slab.
TransmissionChannel t21_channel(const TransverseWaveVector& q, double omega,
                                const SlabLayers& slab, Pol pol);
/// Slab-to-medium-3 counterpart.
TransmissionChannel t23_channel(const TransverseWaveVector& q, double omega,
                                const SlabLayers& slab, Pol pol);

TransmissionSet t21_series(const TransverseWaveVector& q, double omega,
                           const SlabLayers& slab);
TransmissionSet t23_series(const TransverseWaveVector& q, double omega,
                           const SlabLayers& slab);

/// Fourier-domain dyadic Green's function connecting a source at z' inside
/// the slab to a detector in medium 1, as a <=4-term series in z'. The
/// detector-side propagation phase exp(i*kz1*z) is NOT included; the
/// far-field rate uses the stripped form.
MatrixSeries g21(const TransverseWaveVector& q, double omega,
                 const SlabLayers& slab);

/// Counterpart towards medium 3 (phase exp(-i*kz3*z) stripped).
MatrixSeries g23(const TransverseWaveVector& q, double omega,
                 const SlabLayers& slab);

/// Direct closed-form evaluation at a single z', bypassing the series
/// representation. Used by the quadrature cross-check.
Eigen::Matrix3cd g21_direct(const TransverseWaveVector& q, double omega,
                            const SlabLayers& slab, double zprime);
Eigen::Matrix3cd g23_direct(const TransverseWaveVector& q, double omega,
                            const SlabLayers& slab, double zprime);

}  // namespace spdcfilm
