#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "spdcfilm/constants.hpp"

namespace spdcfilm {

/// A linear, isotropic, non-magnetic medium described by its relative
/// permittivity at one frequency. Only passive media are allowed.
struct Medium {
  Complex epsilon{1.0, 0.0};

  Medium() = default;
  explicit Medium(Complex eps) : epsilon(eps) {
    if (eps.imag() < 0.0)
      throw std::invalid_argument("Medium: gain media (Im eps < 0) are not supported");
  }

  /// Principal-branch complex refractive index.
  Complex index() const { return std::sqrt(epsilon); }

  /// k = (omega/c) * n.
  Complex wavenumber(double omega) const { return omega / c0 * index(); }
};

/// In-plane wave vector q = (kx, ky); conserved across all layers.
struct TransverseWaveVector {
  double kx = 0.0;
  double ky = 0.0;

  double norm() const { return std::hypot(kx, ky); }
  double squaredNorm() const { return kx * kx + ky * ky; }

  TransverseWaveVector operator+(const TransverseWaveVector& o) const {
    return {kx + o.kx, ky + o.ky};
  }
  TransverseWaveVector operator-() const { return {-kx, -ky}; }
};

/// Spectral role a permittivity is quoted at.
enum class Role { Pump = 0, Signal = 1, Idler = 2 };

/// The three layers at a single spectral role.
/// Geometry: medium 3 fills z < -a, the slab (medium 2) is -a <= z <= 0,
/// medium 1 fills z > 0. The pump arrives from medium 3 travelling upward.
struct SlabLayers {
  Medium medium1, medium2, medium3;
  double thickness_a = 0.0;
};

/// Full three-layer stack with per-role permittivities. Medium 2 is the
/// nonlinear film.
struct LayerStack {
  std::array<Medium, 3> medium1{};  // indexed by Role
  std::array<Medium, 3> medium2{};
  std::array<Medium, 3> medium3{};
  double thickness_a = 0.0;

  LayerStack() = default;
  LayerStack(std::array<Medium, 3> m1, std::array<Medium, 3> m2,
             std::array<Medium, 3> m3, double thickness)
      : medium1(m1), medium2(m2), medium3(m3), thickness_a(thickness) {
    if (!(thickness > 0.0))
      throw std::invalid_argument("LayerStack: thickness_a must be positive");
  }

  SlabLayers at(Role r) const {
    const auto i = static_cast<std::size_t>(r);
    return {medium1[i], medium2[i], medium3[i], thickness_a};
  }

  LayerStack with_thickness(double a) const {
    LayerStack s = *this;
    if (!(a > 0.0)) throw std::invalid_argument("LayerStack: thickness_a must be positive");
    s.thickness_a = a;
    return s;
  }
};

}  // namespace spdcfilm
