#include "spdcfilm/spdc.hpp"

#include <stdexcept>

#include "spdcfilm/errors.hpp"
#include "spdcfilm/greens.hpp"

namespace spdcfilm {

Chi2Tensor Chi2Tensor::zinc_blende(double chi0) {
  Chi2Tensor t;
  const int x = 0, y = 1, z = 2;
  t(x, y, z) = t(x, z, y) = chi0;
  t(y, x, z) = t(y, z, x) = chi0;
  t(z, x, y) = t(z, y, x) = chi0;
  return t;
}

bool Chi2Tensor::is_zero() const {
  for (double c : components_)
    if (c != 0.0) return false;
  return true;
}

JointSetting make_joint_setting(const LayerStack& stack, const PumpSpec& pump,
                                const Chi2Tensor& chi2, double degeneracy_r,
                                const DetectorSetting& signal,
                                const DetectorSetting& idler) {
  if (!(degeneracy_r > 0.0))
    throw std::invalid_argument("degeneracy factor r must be positive");
  if (signal.theta >= pi / 2.0 || idler.theta >= pi / 2.0 ||
      signal.theta < 0.0 || idler.theta < 0.0)
    throw std::invalid_argument("detector theta must lie in [0, pi/2)");
  if (signal.side != idler.side)
    throw std::invalid_argument(
        "mixed-media coincidences (one photon per outer medium) are not supported");

  JointSetting s{signal, idler, pump, stack, chi2};
  const double omega_p = pump.omega();
  s.signal.omega = omega_p / (1.0 + degeneracy_r);
  s.idler.omega = omega_p - s.signal.omega;
  return s;
}

void apply_phi_symmetric(JointSetting& setting) {
  setting.idler.theta = setting.signal.theta;
  setting.idler.phi = setting.signal.phi + pi;
}

namespace {

const Medium& detection_medium(const DetectorSetting& det, const LayerStack& stack,
                               Role role) {
  const auto i = static_cast<std::size_t>(role);
  return det.side == DetectionSide::Medium1 ? stack.medium1[i] : stack.medium3[i];
}

}  // namespace

TransverseWaveVector detector_q(const DetectorSetting& det, const LayerStack& stack,
                                Role role) {
  const double k = detection_medium(det, stack, role).wavenumber(det.omega).real();
  const double s = std::sin(det.theta);
  return {k * s * std::cos(det.phi), k * s * std::sin(det.phi)};
}

Eigen::Vector3d theta_hat(double theta, double phi, DetectionSide side) {
  const double zsign = side == DetectionSide::Medium1 ? -1.0 : 1.0;
  return {std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi),
          zsign * std::sin(theta)};
}

Eigen::Vector3d phi_hat(double phi) { return {-std::sin(phi), std::cos(phi), 0.0}; }

Eigen::Vector3d xprime(double theta, double phi, DetectionSide side) {
  return std::cos(phi) * theta_hat(theta, phi, side) - std::sin(phi) * phi_hat(phi);
}

Eigen::Vector3d yprime(double theta, double phi, DetectionSide side) {
  return std::sin(phi) * theta_hat(theta, phi, side) + std::cos(phi) * phi_hat(phi);
}

namespace {

MatrixSeries photon_greens(const TransverseWaveVector& q, const DetectorSetting& det,
                           const LayerStack& stack, Role role) {
  const SlabLayers slab = stack.at(role);
  return det.side == DetectionSide::Medium1 ? g21(q, det.omega, slab)
                                            : g23(q, det.omega, slab);
}

std::array<Eigen::Matrix3cd, 3> chi_slices(const Chi2Tensor& chi) {
  std::array<Eigen::Matrix3cd, 3> slices;
  for (int g = 0; g < 3; ++g) {
    Eigen::Matrix3d m;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) m(a, b) = chi(a, b, g);
    slices[static_cast<std::size_t>(g)] = m.cast<Complex>();
  }
  return slices;
}

}  // namespace

Eigen::Matrix3cd jap_matrix(const TransverseWaveVector& q_s,
                            const TransverseWaveVector& q_i,
                            const JointSetting& setting) {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  if (setting.chi2.is_zero()) return m;

  const TransverseWaveVector q_p = q_s + q_i;
  const VectorSeries pump =
      pump_in_slab(q_p, setting.pump, setting.stack.at(Role::Pump));
  if (pump.terms.empty()) return m;

  const MatrixSeries gs =
      photon_greens(q_s, setting.signal, setting.stack, Role::Signal);
  const MatrixSeries gi =
      photon_greens(q_i, setting.idler, setting.stack, Role::Idler);
  const auto chi = chi_slices(setting.chi2);
  const double a = setting.stack.thickness_a;

  for (const auto& js : gs.terms) {
    for (const auto& ki : gi.terms) {
      // C_g(sigma, tau) = Sum_{a,b} gs(sigma,a) chi(a,b,g) gi(tau,b)
      std::array<Eigen::Matrix3cd, 3> c;
      for (int g = 0; g < 3; ++g)
        c[static_cast<std::size_t>(g)] =
            js.amplitude * chi[static_cast<std::size_t>(g)] *
            ki.amplitude.transpose();
      for (const auto& lp : pump.terms) {
        const Complex phase =
            slab_phase_integral(js.kappa + ki.kappa + lp.kappa, a);
        m += phase * (c[0] * lp.amplitude(0) + c[1] * lp.amplitude(1) +
                      c[2] * lp.amplitude(2));
      }
    }
  }
  return m;
}

Complex jap(const TransverseWaveVector& q_s, const TransverseWaveVector& q_i,
            const JointSetting& setting) {
  const Eigen::Matrix3cd m = jap_matrix(q_s, q_i, setting);
  return setting.signal.polarization.transpose() * m * setting.idler.polarization;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(pi * (i + 0.75) / (n + 0.5));
    double p1 = 0.0, dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      p1 = t;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    const auto iu_ = static_cast<std::size_t>(i);
    const auto ju_ = static_cast<std::size_t>(n - 1 - i);
    x[iu_] = -t;
    x[ju_] = t;
    w[iu_] = w[ju_] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

Eigen::Matrix3cd photon_greens_direct(const TransverseWaveVector& q,
                                      const DetectorSetting& det,
                                      const LayerStack& stack, Role role,
                                      double z) {
  const SlabLayers slab = stack.at(role);
  return det.side == DetectionSide::Medium1 ? g21_direct(q, det.omega, slab, z)
                                            : g23_direct(q, det.omega, slab, z);
}

}  // namespace

Complex jap_quadrature(const TransverseWaveVector& q_s,
                       const TransverseWaveVector& q_i,
                       const JointSetting& setting) {
  if (setting.chi2.is_zero()) return {0.0, 0.0};
  const TransverseWaveVector q_p = q_s + q_i;
  const SlabLayers slab_p = setting.stack.at(Role::Pump);
  if (pump_spectrum(q_p, setting.pump, slab_p.medium3) == 0.0) return {0.0, 0.0};

  const double a = setting.stack.thickness_a;
  const auto chi = chi_slices(setting.chi2);
  const Eigen::Vector3cd es = setting.signal.polarization;
  const Eigen::Vector3cd ei = setting.idler.polarization;

  const auto integrand = [&](double z) -> Complex {
    const Eigen::Matrix3cd gsz =
        photon_greens_direct(q_s, setting.signal, setting.stack, Role::Signal, z);
    const Eigen::Matrix3cd giz =
        photon_greens_direct(q_i, setting.idler, setting.stack, Role::Idler, z);
    const Eigen::Vector3cd ep = pump_direct(q_p, setting.pump, slab_p, z);
    const Eigen::RowVector3cd rs = es.transpose() * gsz;
    const Eigen::RowVector3cd ri = ei.transpose() * giz;
    Complex sum{0.0, 0.0};
    for (int g = 0; g < 3; ++g)
      sum += (rs * chi[static_cast<std::size_t>(g)] * ri.transpose())(0) *
             ep(g);
    return sum;
  };

  // Panels sized so each holds a bounded amount of oscillation.
  const double phase_budget =
      (std::abs(kz(q_p, slab_p.medium2, setting.pump.omega())) +
       std::abs(kz(q_s, setting.stack.at(Role::Signal).medium2,
                   setting.signal.omega)) +
       std::abs(kz(q_i, setting.stack.at(Role::Idler).medium2,
                   setting.idler.omega))) *
      a;
  const int panels = std::max(1, static_cast<int>(std::ceil(phase_budget / 40.0)));

  const auto integrate = [&](int order) -> Complex {
    std::vector<double> x, w;
    gauss_legendre(order, x, w);
    Complex total{0.0, 0.0};
    const double h = a / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = -a + p * h;
      const double mid = lo + h / 2.0;
      Complex acc{0.0, 0.0};
      for (std::size_t i = 0; i < x.size(); ++i)
        acc += w[i] * integrand(mid + 0.5 * h * x[i]);
      total += acc * (h / 2.0);
    }
    return total;
  };

  const Complex coarse = integrate(64);
  const Complex fine = integrate(128);
  const double scale = std::max(std::abs(coarse), std::abs(fine));
  if (scale > 0.0 && std::abs(fine - coarse) > 1e-6 * scale)
    throw OracleDivergenceError("quadrature refinement 64->128 did not converge");
  return fine;
}

namespace {

struct RateFactors {
  double prefactor;
  Complex kz_s, kz_i;
};

RateFactors rate_factors(const JointSetting& setting,
                         const TransverseWaveVector& q_s,
                         const TransverseWaveVector& q_i) {
  const Medium& med_s =
      detection_medium(setting.signal, setting.stack, Role::Signal);
  const Medium& med_i = detection_medium(setting.idler, setting.stack, Role::Idler);
  const double n_s = med_s.index().real();
  const double n_i = med_i.index().real();
  const double ws = setting.signal.omega, wi = setting.idler.omega;
  RateFactors f;
  f.prefactor = n_s * n_i * std::pow(ws, 3) * std::pow(wi, 3) / std::pow(c0, 6);
  f.kz_s = kz(q_s, med_s, ws);
  f.kz_i = kz(q_i, med_i, wi);
  return f;
}

void check_angles(const JointSetting& setting) {
  if (setting.signal.theta >= pi / 2.0 || setting.idler.theta >= pi / 2.0)
    throw std::invalid_argument("detection angle theta must be below pi/2");
}

}  // namespace

double farfield_rate(const JointSetting& setting) {
  check_angles(setting);
  const auto q_s = detector_q(setting.signal, setting.stack, Role::Signal);
  const auto q_i = detector_q(setting.idler, setting.stack, Role::Idler);
  const auto f = rate_factors(setting, q_s, q_i);
  const Complex amp = jap(q_s, q_i, setting);
  return f.prefactor * std::norm(amp * f.kz_s * f.kz_i);
}

double unpolarized_rate(const JointSetting& setting) {
  check_angles(setting);
  const auto q_s = detector_q(setting.signal, setting.stack, Role::Signal);
  const auto q_i = detector_q(setting.idler, setting.stack, Role::Idler);
  const auto f = rate_factors(setting, q_s, q_i);
  const Eigen::Matrix3cd m = jap_matrix(q_s, q_i, setting);
  const double kzfac = std::norm(f.kz_s * f.kz_i);
  double sum = 0.0;
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) sum += std::norm(m(s, t)) * kzfac;
  return f.prefactor * sum;
}

Eigen::Matrix2cd amplitude_matrix(const JointSetting& setting) {
  check_angles(setting);
  const auto q_s = detector_q(setting.signal, setting.stack, Role::Signal);
  const auto q_i = detector_q(setting.idler, setting.stack, Role::Idler);
  const Eigen::Matrix3cd m = jap_matrix(q_s, q_i, setting);

  const auto& s = setting.signal;
  const auto& i = setting.idler;
  const std::array<Eigen::Vector3cd, 2> es = {
      xprime(s.theta, s.phi, s.side).cast<Complex>(),
      yprime(s.theta, s.phi, s.side).cast<Complex>()};
  const std::array<Eigen::Vector3cd, 2> ei = {
      xprime(i.theta, i.phi, i.side).cast<Complex>(),
      yprime(i.theta, i.phi, i.side).cast<Complex>()};

  Eigen::Matrix2cd amp;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      amp(j, k) = es[static_cast<std::size_t>(j)].transpose() * m *
                  ei[static_cast<std::size_t>(k)];
  return amp;
}

}  // namespace spdcfilm
