#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spdcfilm/constants.hpp"

namespace spdcfilm {

/// A finite sum  Sum_j amplitude_j * exp(i * kappa_j * z)  of complex tensor
/// amplitudes. This is the universal z-dependence carrier for the slab
/// Green's functions (3x3 amplitudes) and the intraslab pump field
/// (3-vector amplitudes); it makes the SPDC z-integral analytic.
template <typename Amplitude>
struct ExponentialSeries {
  struct Term {
    Amplitude amplitude;
    Complex kappa;  // 1/m
  };

  std::vector<Term> terms;

  Amplitude evaluate(double z) const {
    Amplitude sum = Amplitude::Zero();
    for (const auto& t : terms) sum += t.amplitude * std::exp(iu * t.kappa * z);
    return sum;
  }
};

using VectorSeries = ExponentialSeries<Eigen::Vector3cd>;
using MatrixSeries = ExponentialSeries<Eigen::Matrix3cd>;

/// Integral of exp(i*kappa*z) over the slab, z in [-a, 0].
/// Near kappa = 0 the closed form (1 - exp(-i*kappa*a)) / (i*kappa) suffers
/// catastrophic cancellation (roundoff ~ eps/|kappa a|), so below
/// |kappa|*a = 1e-4 a second-order series takes over; there the series
/// truncation error is ~(kappa a)^3/24 < 5e-14 and the two branches agree
/// to better than 1e-10 relative across the switch.
inline Complex slab_phase_integral(Complex kappa, double a) {
  if (std::abs(kappa) * a < 1e-4) {
    const Complex u = iu * kappa * a;
    return a * (1.0 - u / 2.0 + u * u / 6.0);
  }
  return (1.0 - std::exp(-iu * kappa * a)) / (iu * kappa);
}

}  // namespace spdcfilm
