#include "spdcfilm/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "spdcfilm/errors.hpp"
#include "spdcfilm/parallel.hpp"

namespace spdcfilm {

ScanGrid phi_symmetric_scan(const JointSetting& base, const ScanAxis& theta_axis,
                            const ScanAxis& phi_axis, int threads) {
  ScanGrid grid;
  grid.axis1 = theta_axis;
  grid.axis2 = phi_axis;
  const std::size_t n =
      static_cast<std::size_t>(theta_axis.count) * phi_axis.count;
  grid.values.assign(n, 0.0);

  parallel_for(n, threads, [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / phi_axis.count;
    const int j = static_cast<int>(idx) % phi_axis.count;
    JointSetting s = base;
    s.signal.theta = theta_axis.value(i);
    s.signal.phi = phi_axis.value(j);
    apply_phi_symmetric(s);
    grid.values[idx] = unpolarized_rate(s);
  });
  return grid;
}

ScanGrid phi_symmetric_profile(const JointSetting& base, const ScanAxis& theta_axis,
                               int threads) {
  ScanGrid grid;
  grid.axis1 = theta_axis;
  grid.values.assign(static_cast<std::size_t>(theta_axis.count), 0.0);
  parallel_for(grid.values.size(), threads, [&](std::size_t idx) {
    JointSetting s = base;
    s.signal.theta = theta_axis.value(static_cast<int>(idx));
    apply_phi_symmetric(s);
    grid.values[idx] = unpolarized_rate(s);
  });
  return grid;
}

ScanGrid thickness_scan(const JointSetting& base, const ScanAxis& a_axis,
                        int threads) {
  ScanGrid grid;
  grid.axis1 = a_axis;
  grid.values.assign(static_cast<std::size_t>(a_axis.count), 0.0);
  parallel_for(grid.values.size(), threads, [&](std::size_t idx) {
    JointSetting s = base;
    s.stack = base.stack.with_thickness(a_axis.value(static_cast<int>(idx)));
    apply_phi_symmetric(s);
    grid.values[idx] = unpolarized_rate(s);
  });
  return grid;
}

ScanGrid theta_map(const JointSetting& base, const ScanAxis& theta_s_axis,
                   const ScanAxis& theta_i_axis, int threads) {
  ScanGrid grid;
  grid.axis1 = theta_s_axis;
  grid.axis2 = theta_i_axis;
  const std::size_t n =
      static_cast<std::size_t>(theta_s_axis.count) * theta_i_axis.count;
  grid.values.assign(n, 0.0);

  parallel_for(n, threads, [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / theta_i_axis.count;
    const int j = static_cast<int>(idx) % theta_i_axis.count;
    JointSetting s = base;
    s.signal.theta = theta_s_axis.value(i);
    s.idler.theta = theta_i_axis.value(j);
    s.idler.phi = base.signal.phi + pi;
    grid.values[idx] = unpolarized_rate(s);
  });
  return grid;
}

ScanSummary fwhm(const ScanGrid& profile) {
  const auto& v = profile.values;
  const int n = static_cast<int>(v.size());
  if (n < 3) throw IncompleteProfileError("profile too short for FWHM");

  const auto imax = static_cast<int>(
      std::max_element(v.begin(), v.end()) - v.begin());
  if (imax == 0 || imax == n - 1)
    throw IncompleteProfileError("profile peak sits on an endpoint");

  const double half = v[static_cast<std::size_t>(imax)] / 2.0;
  const auto axis_at = [&](int i) { return profile.axis1.value(i); };
  const auto cross = [&](int stride) -> double {
    for (int i = imax; i + stride >= 0 && i + stride < n; i += stride) {
      const double a = v[static_cast<std::size_t>(i)];
      const double b = v[static_cast<std::size_t>(i + stride)];
      if ((a - half) * (b - half) <= 0.0 && a != b) {
        const double f = (half - a) / (b - a);
        return axis_at(i) + f * (axis_at(i + stride) - axis_at(i));
      }
    }
    throw IncompleteProfileError("half maximum not bracketed");
  };

  const double left = cross(-1);
  const double right = cross(+1);

  ScanSummary s;
  s.peak_location = axis_at(imax);
  s.peak_value = v[static_cast<std::size_t>(imax)];
  s.fwhm = std::abs(right - left);
  return s;
}

std::optional<double> extract_period(const ScanGrid& profile, double min_location) {
  const auto& v = profile.values;
  const int n = static_cast<int>(v.size());
  if (n < 3) return std::nullopt;
  const double global_max = *std::max_element(v.begin(), v.end());
  const double floor = 0.2 * global_max;

  std::vector<double> peaks;
  for (int i = 1; i + 1 < n; ++i) {
    const double x = profile.axis1.value(i);
    if (x <= min_location) continue;
    const double a = v[static_cast<std::size_t>(i - 1)];
    const double b = v[static_cast<std::size_t>(i)];
    const double c = v[static_cast<std::size_t>(i + 1)];
    if (b > floor && b >= a && b > c) peaks.push_back(x);
  }
  if (peaks.size() < 2) return std::nullopt;
  return (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
}

double slab_angle(const LayerStack& stack, Role role, double theta_detect,
                  DetectionSide side) {
  const auto i = static_cast<std::size_t>(role);
  const double n_out = (side == DetectionSide::Medium1 ? stack.medium1[i]
                                                       : stack.medium3[i])
                           .index()
                           .real();
  const double n2 = stack.medium2[i].index().real();
  return std::asin(n_out / n2 * std::sin(theta_detect));
}

double opd_period(const LayerStack& stack, double theta_detect1, double lambda_s) {
  const double n2s =
      stack.medium2[static_cast<std::size_t>(Role::Signal)].index().real();
  const double theta2 = slab_angle(stack, Role::Signal, theta_detect1);
  return lambda_s / (2.0 * n2s * std::cos(theta2));
}

DecayLength decay_length(const Medium& slab_medium_pump, double lambda_p) {
  const double k2 = (2.0 * pi / lambda_p * slab_medium_pump.index()).imag();
  if (k2 <= 0.0) return {0.0, true};
  return {1.0 / k2, false};
}

CoherenceLength coherence_length(const LayerStack& stack, double theta_2s,
                                 double theta_2i, double omega_s, double omega_i,
                                 double omega_p) {
  const double k2p =
      stack.medium2[static_cast<std::size_t>(Role::Pump)].wavenumber(omega_p).real();
  const double k2s = stack.medium2[static_cast<std::size_t>(Role::Signal)]
                         .wavenumber(omega_s)
                         .real();
  const double k2i =
      stack.medium2[static_cast<std::size_t>(Role::Idler)].wavenumber(omega_i).real();
  const double dk = k2p - k2s * std::cos(theta_2s) - k2i * std::cos(theta_2i);
  if (std::abs(dk) < 1e-12 * std::max({k2p, k2s, k2i})) return {0.0, true};
  return {pi / std::abs(dk), false};
}

double idler_angle(double degeneracy_r, double theta_s, double n_s, double n_i) {
  if (!(degeneracy_r > 0.0))
    throw std::invalid_argument("degeneracy factor r must be positive");
  const double s =
      std::abs(std::sin(theta_s) * n_s) / (degeneracy_r * std::abs(n_i));
  if (s > 1.0)
    throw NoPropagatingIdlerError("no propagating idler: required sine " +
                                  std::to_string(s) + " exceeds 1");
  return std::asin(s);
}

}  // namespace spdcfilm
