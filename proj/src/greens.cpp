#include "spdcfilm/greens.hpp"

#include "spdcfilm/errors.hpp"

namespace spdcfilm {

ResonancePoleError::ResonancePoleError(double q, double omega, double thickness)
    : PhysicsError("Fabry-Pérot resonance pole at q=" + std::to_string(q) +
                   " 1/m, omega=" + std::to_string(omega) +
                   " rad/s, a=" + std::to_string(thickness) + " m"),
      q_(q),
      omega_(omega),
      thickness_(thickness) {}

namespace {

struct SlabFresnel {
  Complex r21, r23, t21, t23;
  Complex kz2;
};

SlabFresnel slab_fresnel(const TransverseWaveVector& q, double omega,
                         const SlabLayers& slab, Pol pol) {
  const auto f21 = fresnel(slab.medium2, slab.medium1, q, omega);
  const auto f23 = fresnel(slab.medium2, slab.medium3, q, omega);
  SlabFresnel s;
  s.kz2 = kz(q, slab.medium2, omega);
  if (pol == Pol::S) {
    s.r21 = f21.r_s;
    s.t21 = f21.t_s;
    s.r23 = f23.r_s;
    s.t23 = f23.t_s;
  } else {
    s.r21 = f21.r_p;
    s.t21 = f21.t_p;
    s.r23 = f23.r_p;
    s.t23 = f23.t_p;
  }
  return s;
}

Complex fp_denominator(const SlabFresnel& f, const TransverseWaveVector& q,
                       double omega, double a) {
  const Complex loop = f.r23 * f.r21 * std::exp(iu * f.kz2 * (2.0 * a));
  const Complex den = 1.0 - loop;
  if (std::abs(den) < 1e-12 * std::abs(f.r23 * f.r21))
    throw ResonancePoleError(q.norm(), omega, a);
  return den;
}

}  // namespace

TransmissionChannel t21_channel(const TransverseWaveVector& q, double omega,
                                const SlabLayers& slab, Pol pol) {
  const auto f = slab_fresnel(q, omega, slab, pol);
  const double a = slab.thickness_a;
  const Complex den = fp_denominator(f, q, omega, a);

  TransmissionChannel c;
  c.denominator = den;
  c.up = {f.t21 / den, -f.kz2};
  c.down = {f.t21 * f.r23 * std::exp(iu * f.kz2 * (2.0 * a)) / den, f.kz2};
  return c;
}

TransmissionChannel t23_channel(const TransverseWaveVector& q, double omega,
                                const SlabLayers& slab, Pol pol) {
  const auto f = slab_fresnel(q, omega, slab, pol);
  const double a = slab.thickness_a;
  const Complex den = fp_denominator(f, q, omega, a);
  const Complex phase_a = std::exp(iu * f.kz2 * a);

  TransmissionChannel c;
  c.denominator = den;
  c.down = {f.t23 * phase_a / den, f.kz2};          // exp(i kz2 (a+z'))
  c.up = {f.t23 * f.r21 * phase_a / den, -f.kz2};   // r21 exp(i kz2 (a-z'))
  return c;
}

TransmissionSet t21_series(const TransverseWaveVector& q, double omega,
                           const SlabLayers& slab) {
  return {t21_channel(q, omega, slab, Pol::S), t21_channel(q, omega, slab, Pol::P)};
}

TransmissionSet t23_series(const TransverseWaveVector& q, double omega,
                           const SlabLayers& slab) {
  return {t23_channel(q, omega, slab, Pol::S), t23_channel(q, omega, slab, Pol::P)};
}

namespace {

Eigen::Matrix3cd outer(const Eigen::Vector3cd& left, const Eigen::Vector3cd& right) {
  return left * right.transpose();  // unconjugated dyadic
}

}  // namespace

MatrixSeries g21(const TransverseWaveVector& q, double omega,
                 const SlabLayers& slab) {
  const auto ts = t21_channel(q, omega, slab, Pol::S);
  const auto tp = t21_channel(q, omega, slab, Pol::P);
  const auto tri1 = polarization_triad(q, slab.medium1, omega);
  const auto tri2 = polarization_triad(q, slab.medium2, omega);
  const Complex pref = -iu / (2.0 * kz(q, slab.medium2, omega));

  const Eigen::Vector3cd s = tri2.s_hat.cast<Complex>();
  const Eigen::Matrix3cd ss = outer(s, s);

  MatrixSeries g;
  g.terms.reserve(4);
  g.terms.push_back({pref * ts.up.amplitude * ss, ts.up.kappa});
  g.terms.push_back({pref * ts.down.amplitude * ss, ts.down.kappa});
  g.terms.push_back({pref * tp.up.amplitude * outer(tri1.p_hat_up, tri2.p_hat_up),
                     tp.up.kappa});
  g.terms.push_back({pref * tp.down.amplitude * outer(tri1.p_hat_up, tri2.p_hat_down),
                     tp.down.kappa});
  return g;
}

MatrixSeries g23(const TransverseWaveVector& q, double omega,
                 const SlabLayers& slab) {
  const auto ts = t23_channel(q, omega, slab, Pol::S);
  const auto tp = t23_channel(q, omega, slab, Pol::P);
  const auto tri3 = polarization_triad(q, slab.medium3, omega);
  const auto tri2 = polarization_triad(q, slab.medium2, omega);
  const Complex pref = -iu / (2.0 * kz(q, slab.medium2, omega));

  const Eigen::Vector3cd s = tri2.s_hat.cast<Complex>();
  const Eigen::Matrix3cd ss = outer(s, s);

  MatrixSeries g;
  g.terms.reserve(4);
  g.terms.push_back({pref * ts.down.amplitude * ss, ts.down.kappa});
  g.terms.push_back({pref * ts.up.amplitude * ss, ts.up.kappa});
  g.terms.push_back({pref * tp.down.amplitude * outer(tri3.p_hat_down, tri2.p_hat_down),
                     tp.down.kappa});
  g.terms.push_back({pref * tp.up.amplitude * outer(tri3.p_hat_down, tri2.p_hat_up),
                     tp.up.kappa});
  return g;
}

Eigen::Matrix3cd g21_direct(const TransverseWaveVector& q, double omega,
                            const SlabLayers& slab, double zprime) {
  const auto fs = slab_fresnel(q, omega, slab, Pol::S);
  const auto fp = slab_fresnel(q, omega, slab, Pol::P);
  const double a = slab.thickness_a;
  const Complex den_s = fp_denominator(fs, q, omega, a);
  const Complex den_p = fp_denominator(fp, q, omega, a);

  const Complex Ts = fs.t21 *
                     (std::exp(-iu * fs.kz2 * zprime) +
                      fs.r23 * std::exp(iu * fs.kz2 * (2.0 * a + zprime))) /
                     den_s;
  const Complex Tp_up = fp.t21 * std::exp(-iu * fp.kz2 * zprime) / den_p;
  const Complex Tp_down =
      fp.t21 * fp.r23 * std::exp(iu * fp.kz2 * (2.0 * a + zprime)) / den_p;

  const auto tri1 = polarization_triad(q, slab.medium1, omega);
  const auto tri2 = polarization_triad(q, slab.medium2, omega);
  const Eigen::Vector3cd s = tri2.s_hat.cast<Complex>();
  const Complex pref = -iu / (2.0 * kz(q, slab.medium2, omega));

  return pref * (Ts * outer(s, s) + Tp_up * outer(tri1.p_hat_up, tri2.p_hat_up) +
                 Tp_down * outer(tri1.p_hat_up, tri2.p_hat_down));
}

Eigen::Matrix3cd g23_direct(const TransverseWaveVector& q, double omega,
                            const SlabLayers& slab, double zprime) {
  const auto fs = slab_fresnel(q, omega, slab, Pol::S);
  const auto fp = slab_fresnel(q, omega, slab, Pol::P);
  const double a = slab.thickness_a;
  const Complex den_s = fp_denominator(fs, q, omega, a);
  const Complex den_p = fp_denominator(fp, q, omega, a);

  const Complex Ts = fs.t23 *
                     (std::exp(iu * fs.kz2 * (a + zprime)) +
                      fs.r21 * std::exp(iu * fs.kz2 * (a - zprime))) /
                     den_s;
  const Complex Tp_down = fp.t23 * std::exp(iu * fp.kz2 * (a + zprime)) / den_p;
  const Complex Tp_up =
      fp.t23 * fp.r21 * std::exp(iu * fp.kz2 * (a - zprime)) / den_p;

  const auto tri3 = polarization_triad(q, slab.medium3, omega);
  const auto tri2 = polarization_triad(q, slab.medium2, omega);
  const Eigen::Vector3cd s = tri2.s_hat.cast<Complex>();
  const Complex pref = -iu / (2.0 * kz(q, slab.medium2, omega));

  return pref *
         (Ts * outer(s, s) + Tp_down * outer(tri3.p_hat_down, tri2.p_hat_down) +
          Tp_up * outer(tri3.p_hat_down, tri2.p_hat_up));
}

}  // namespace spdcfilm
