#pragma once

#include "spdcfilm/spdc.hpp"

namespace spdcfilm::defaults {

/// Bundled example scenario: a GaAs film on a fused-silica substrate with
/// air on top, pumped at 500 nm. Permittivities are held flat per spectral
/// role (pump values at 500 nm, signal/idler values at 1 um).
inline LayerStack gaas_on_silica(double thickness_m) {
  const Medium air{Complex(1.0, 0.0)};
  const Medium gaas_pump{Complex(17.63, 3.83)};
  const Medium gaas_pair{Complex(12.06, 0.0)};
  const Medium silica_pump{Complex(2.14, 0.0)};
  const Medium silica_pair{Complex(2.10, 0.0)};
  return LayerStack({air, air, air}, {gaas_pump, gaas_pair, gaas_pair},
                    {silica_pump, silica_pair, silica_pair}, thickness_m);
}

inline PumpSpec pump_500nm() {
  PumpSpec p;
  p.wavelength_m = 500e-9;
  p.amplitude = 1.0;
  p.spectral_width_invm = 6.6e5;
  return p;
}

inline constexpr double lambda_p = 500e-9;

/// Degenerate phi-symmetric detection in medium 1 at 45 degrees for an
/// ultra-thin film (a = 0.01 lambda_p) unless overridden.
inline JointSetting joint_setting(double thickness_m = 0.01 * lambda_p,
                                  double degeneracy_r = 1.0,
                                  double theta_s = deg2rad(45.0),
                                  double phi_s = 0.0) {
  DetectorSetting sig;
  sig.theta = theta_s;
  sig.phi = phi_s;
  DetectorSetting idl = sig;
  JointSetting s =
      make_joint_setting(gaas_on_silica(thickness_m), pump_500nm(),
                         Chi2Tensor::zinc_blende(1.0), degeneracy_r, sig, idl);
  apply_phi_symmetric(s);
  return s;
}

}  // namespace spdcfilm::defaults
