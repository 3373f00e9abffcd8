#include "spdcfilm/tomography.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "spdcfilm/errors.hpp"
#include "spdcfilm/parallel.hpp"

namespace spdcfilm {

PolarizationState2 PolarizationState2::from_label(char label) {
  const double s = 1.0 / std::sqrt(2.0);
  PolarizationState2 st;
  st.label = label;
  switch (label) {
    case 'H': st.ket = Eigen::Vector2cd(1.0, 0.0); break;
    case 'V': st.ket = Eigen::Vector2cd(0.0, 1.0); break;
    case 'D': st.ket = Eigen::Vector2cd(s, s); break;
    case 'A': st.ket = Eigen::Vector2cd(s, -s); break;
    case 'R': st.ket = Eigen::Vector2cd(s, Complex(0.0, -s)); break;
    case 'L': st.ket = Eigen::Vector2cd(s, Complex(0.0, s)); break;
    default:
      throw std::invalid_argument(std::string("unknown polarization label: ") +
                                  label);
  }
  return st;
}

const std::array<TomographicPair, 16>& tomographic_states() {
  static const std::array<TomographicPair, 16> states = [] {
    const char* labels[16] = {"HH", "HV", "VV", "VH", "RH", "RV", "DV", "DD",
                              "RD", "HD", "VD", "VL", "HL", "RL", "DR", "DH"};
    std::array<TomographicPair, 16> out;
    for (std::size_t i = 0; i < 16; ++i)
      out[i] = {PolarizationState2::from_label(labels[i][0]),
                PolarizationState2::from_label(labels[i][1])};
    return out;
  }();
  return states;
}

void validate_density_matrix(const DensityMatrix4& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw ReconstructionError("density matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10)
    throw ReconstructionError("density matrix trace differs from 1");
  Eigen::SelfAdjointEigenSolver<DensityMatrix4> es(rho);
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw ReconstructionError("density matrix has a negative eigenvalue");
}

double projection_rate(const JointSetting& setting, const TomographicPair& pair) {
  const auto analyzer = [](const PolarizationState2& st, const DetectorSetting& d) {
    const Eigen::Vector3cd xp = xprime(d.theta, d.phi, d.side).cast<Complex>();
    const Eigen::Vector3cd yp = yprime(d.theta, d.phi, d.side).cast<Complex>();
    return Eigen::Vector3cd(std::conj(st.ket(0)) * xp + std::conj(st.ket(1)) * yp);
  };
  JointSetting s = setting;
  s.signal.polarization = analyzer(pair.first, setting.signal);
  s.idler.polarization = analyzer(pair.second, setting.idler);
  return farfield_rate(s);
}

TomographyRecord measure_tomography(const JointSetting& setting) {
  TomographyRecord rec{};
  const auto& states = tomographic_states();
  for (std::size_t i = 0; i < 16; ++i) {
    rec.entries[i] = {states[i].first.label, states[i].second.label,
                      projection_rate(setting, states[i])};
  }
  return rec;
}

namespace {

Eigen::Vector4cd pair_ket(const TomographicPair& p) {
  Eigen::Vector4cd k;
  // basis order {HH, HV, VH, VV}
  k << p.first.ket(0) * p.second.ket(0), p.first.ket(0) * p.second.ket(1),
      p.first.ket(1) * p.second.ket(0), p.first.ket(1) * p.second.ket(1);
  return k;
}

// Dual matrices M_nu with rho = Sum_nu rate_nu M_nu, precomputed by
// inverting the overlap matrix B_{mu nu} = Tr(P_mu P_nu) of the projectors.
const std::array<DensityMatrix4, 16>& dual_matrices() {
  static const std::array<DensityMatrix4, 16> duals = [] {
    std::array<DensityMatrix4, 16> proj;
    for (std::size_t i = 0; i < 16; ++i) {
      const Eigen::Vector4cd k = pair_ket(tomographic_states()[i]);
      proj[i] = k * k.adjoint();
    }
    Eigen::Matrix<double, 16, 16> overlap;
    for (int m = 0; m < 16; ++m)
      for (int n = 0; n < 16; ++n)
        overlap(m, n) =
            (proj[static_cast<std::size_t>(m)] * proj[static_cast<std::size_t>(n)])
                .trace()
                .real();
    const Eigen::Matrix<double, 16, 16> inv = overlap.inverse();
    std::array<DensityMatrix4, 16> out;
    for (int nu = 0; nu < 16; ++nu) {
      DensityMatrix4 m = DensityMatrix4::Zero();
      for (int mu = 0; mu < 16; ++mu)
        m += inv(nu, mu) * proj[static_cast<std::size_t>(mu)];
      out[static_cast<std::size_t>(nu)] = m;
    }
    return out;
  }();
  return duals;
}

}  // namespace

DensityMatrix4 reconstruct_rho(const TomographyRecord& record) {
  double peak = 0.0;
  for (const auto& e : record.entries) peak = std::max(peak, std::abs(e.rate));
  if (peak == 0.0)
    throw UndefinedStateError("all-zero tomography record has no state");

  const auto& states = tomographic_states();
  for (std::size_t i = 0; i < 16; ++i) {
    if (record.entries[i].state_s != states[i].first.label ||
        record.entries[i].state_i != states[i].second.label)
      throw ReconstructionError("tomography record does not match the "
                                "canonical projection set");
  }

  // Rates are rescaled by their peak before inversion; the scale cancels in
  // the trace normalization but keeps tiny-amplitude records out of the
  // denormal range.
  DensityMatrix4 rho = DensityMatrix4::Zero();
  const auto& duals = dual_matrices();
  for (std::size_t i = 0; i < 16; ++i)
    rho += (record.entries[i].rate / peak) * duals[i];
  rho /= rho.trace();

  validate_density_matrix(rho);
  return rho;
}

DensityMatrix4 rho_direct(const JointSetting& setting) {
  const Eigen::Matrix2cd a = amplitude_matrix(setting);
  const double peak = a.cwiseAbs().maxCoeff();
  if (peak == 0.0)
    throw UndefinedStateError("zero amplitude matrix has no polarization state");
  Eigen::Vector4cd psi;
  psi << a(0, 0) / peak, a(0, 1) / peak, a(1, 0) / peak, a(1, 1) / peak;
  psi /= psi.norm();
  return psi * psi.adjoint();
}

double schmidt_number(const DensityMatrix4& rho) {
  validate_density_matrix(rho);

  Eigen::Matrix2cd rho_s = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd rho_i = Eigen::Matrix2cd::Zero();
  for (int j = 0; j < 2; ++j)
    for (int jp = 0; jp < 2; ++jp)
      for (int k = 0; k < 2; ++k) {
        rho_s(j, jp) += rho(j * 2 + k, jp * 2 + k);  // trace out idler
        rho_i(j, jp) += rho(k * 2 + j, k * 2 + jp);  // trace out signal
      }

  const double k_s = 1.0 / (rho_s * rho_s).trace().real();
  const double k_i = 1.0 / (rho_i * rho_i).trace().real();
  const double purity = (rho * rho).trace().real();
  if (purity > 1.0 - 1e-6 && std::abs(k_s - k_i) > 1e-8)
    throw ReconstructionError("reduced Schmidt numbers disagree for pure state");
  return k_s;
}

SchmidtMap schmidt_map(const JointSetting& base, const ScanAxis& theta_i_axis,
                       const ScanAxis& phi_i_axis, int threads) {
  SchmidtMap map;
  map.k_grid.axis1 = theta_i_axis;
  map.k_grid.axis2 = phi_i_axis;
  map.rate_grid.axis1 = theta_i_axis;
  map.rate_grid.axis2 = phi_i_axis;
  const std::size_t n =
      static_cast<std::size_t>(theta_i_axis.count) * phi_i_axis.count;
  map.k_grid.values.assign(n, std::nan(""));
  map.rate_grid.values.assign(n, 0.0);

  parallel_for(n, threads, [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / phi_i_axis.count;
    const int j = static_cast<int>(idx) % phi_i_axis.count;
    JointSetting s = base;
    s.idler.theta = theta_i_axis.value(i);
    s.idler.phi = phi_i_axis.value(j);
    map.rate_grid.values[idx] = unpolarized_rate(s);
    try {
      map.k_grid.values[idx] = schmidt_number(rho_direct(s));
    } catch (const UndefinedStateError&) {
      // zero-amplitude point: left as missing
    }
  });

  double best_k = -1.0, best_rate = -1.0;
  for (std::size_t idx = 0; idx < n; ++idx) {
    const int i = static_cast<int>(idx) / phi_i_axis.count;
    const int j = static_cast<int>(idx) % phi_i_axis.count;
    const double kv = map.k_grid.values[idx];
    if (!std::isnan(kv) && kv > best_k) {
      best_k = kv;
      map.argmax_k_theta = theta_i_axis.value(i);
      map.argmax_k_phi = phi_i_axis.value(j);
    }
    if (map.rate_grid.values[idx] > best_rate) {
      best_rate = map.rate_grid.values[idx];
      map.argmax_rate_theta = theta_i_axis.value(i);
      map.argmax_rate_phi = phi_i_axis.value(j);
    }
  }
  return map;
}

}  // namespace spdcfilm
