#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spdcfilm/waves.hpp"

using namespace spdcfilm;

namespace {
const double lam = 1e-6;
const double om = 2.0 * pi * c0 / lam;
}  // namespace

TEST_CASE("kz at normal incidence equals the medium wavenumber") {
  const Complex v = kz({0.0, 0.0}, Medium(Complex(1.0, 0.0)), om);
  CHECK(v.real() == doctest::Approx(2.0 * pi * 1e6).epsilon(1e-12));
  CHECK(v.imag() == 0.0);
}

TEST_CASE("kz beyond the light line is purely imaginary with Im >= 0") {
  const Complex v = kz({1e7, 0.0}, Medium(Complex(1.0, 0.0)), om);
  const double expected = std::sqrt(1e14 - std::pow(2.0 * pi * 1e6, 2));
  CHECK(v.real() == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(v.imag() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(7.779e6).epsilon(1e-3));
}

TEST_CASE("kz in an absorbing medium follows the principal index root") {
  const double lp = 500e-9;
  const double omp = 2.0 * pi * c0 / lp;
  const Complex v = kz({0.0, 0.0}, Medium(Complex(17.63, 3.83)), omp);
  const Complex expected = 2.0 * pi / lp * Complex(4.224, 0.454);
  CHECK(std::abs(v - expected) / std::abs(expected) < 1e-3);
}

TEST_CASE("kz branch: Im >= 0 always, continuity away from the branch point") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> eps_re(1.0, 18.0), eps_im(0.0, 4.0);
  for (int n = 0; n < 200; ++n) {
    const Medium m(Complex(eps_re(rng), eps_im(rng)));
    std::uniform_real_distribution<double> qd(0.0, 3e7);
    const Complex v = kz({qd(rng), qd(rng)}, m, om);
    CHECK(v.imag() >= -1e-18);
  }

  // continuity in |q| except at the lossless branch point
  const Medium m(Complex(2.25, 0.0));
  const double k = m.wavenumber(om).real();
  for (double q = 0.1 * k; q < 2.0 * k; q += 0.013 * k) {
    if (std::abs(q - k) < 0.03 * k) continue;
    const double dq = 1e-6 * k;
    const Complex a = kz({q, 0.0}, m, om);
    const Complex b = kz({q + dq, 0.0}, m, om);
    CHECK(std::abs(b - a) < 1e-3 * k);
  }
}

TEST_CASE("polarization triad matches the closed forms") {
  const Medium vac{Complex(1.0, 0.0)};

  SUBCASE("q along x gives s_hat = y_hat") {
    const auto t = polarization_triad({1e6, 0.0}, vac, om);
    CHECK(t.s_hat.isApprox(Eigen::Vector3d(0, 1, 0), 1e-15));
  }

  SUBCASE("q = 0 axis-limit convention") {
    const auto t = polarization_triad({0.0, 0.0}, vac, om);
    CHECK(t.s_hat.isApprox(Eigen::Vector3d(0, 1, 0), 1e-15));
    CHECK(std::abs(t.p_hat_up(0) - Complex(-1.0, 0.0)) < 1e-14);
    CHECK(std::abs(t.p_hat_up(1)) == 0.0);
    CHECK(std::abs(t.p_hat_up(2)) == 0.0);
    CHECK(std::abs(t.p_hat_down(0) - Complex(1.0, 0.0)) < 1e-14);
  }

  SUBCASE("propagating q along x") {
    const double q = 3e6;
    const auto t = polarization_triad({q, 0.0}, vac, om);
    const Complex kzv = kz({q, 0.0}, vac, om);
    const Complex k = vac.wavenumber(om);
    CHECK(std::abs(t.p_hat_up(0) - (-kzv / k)) < 1e-14);
    CHECK(std::abs(t.p_hat_up(2) - q / k) < 1e-14);
  }
}

TEST_CASE("triad orthogonality and unconjugated normalization") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> qd(-2e7, 2e7), eps_re(1.0, 18.0),
      eps_im(0.0, 4.0);
  for (int n = 0; n < 100; ++n) {
    const Medium m(Complex(eps_re(rng), eps_im(rng)));
    const TransverseWaveVector q{qd(rng), qd(rng)};
    const auto t = polarization_triad(q, m, om);
    const Complex kzv = kz(q, m, om);
    const Eigen::Vector3cd k_up(q.kx, q.ky, kzv);
    const Eigen::Vector3cd k_down(q.kx, q.ky, -kzv);
    const double scale = std::abs(m.wavenumber(om));

    // s_hat: unit, in-plane, orthogonal to both wave vectors
    CHECK(t.s_hat.z() == 0.0);
    CHECK(std::abs(t.s_hat.norm() - 1.0) < 1e-12);
    CHECK(std::abs(t.s_hat.cast<Complex>().cwiseProduct(k_up).sum()) < 1e-12 * scale);

    // unconjugated p.p = 1 and transversality p.k = 0
    const Complex pp_up = t.p_hat_up.cwiseProduct(t.p_hat_up).sum();
    const Complex pp_down = t.p_hat_down.cwiseProduct(t.p_hat_down).sum();
    CHECK(std::abs(pp_up - 1.0) < 1e-12);
    CHECK(std::abs(pp_down - 1.0) < 1e-12);
    CHECK(std::abs(t.p_hat_up.cwiseProduct(k_up).sum()) < 1e-12 * scale);
    CHECK(std::abs(t.p_hat_down.cwiseProduct(k_down).sum()) < 1e-12 * scale);
  }
}

TEST_CASE("Fresnel coefficients at normal incidence, n1=1 -> n2=2") {
  const auto f = fresnel(Medium(Complex(1, 0)), Medium(Complex(4, 0)), {0, 0}, om);
  CHECK(f.r_s.real() == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(f.t_s.real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(f.r_p.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK_FALSE(f.p_pole);
}

TEST_CASE("Fresnel limits for matched media") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ed(1.0, 16.0), qd(0.0, 1.5e7);
  for (int n = 0; n < 50; ++n) {
    const Medium m(Complex(ed(rng), 0.0));
    const auto f = fresnel(m, m, {qd(rng), qd(rng)}, om);
    CHECK(std::abs(f.r_s) < 1e-12);
    CHECK(std::abs(f.r_p) < 1e-12);
    CHECK(std::abs(f.t_s - 1.0) < 1e-12);
    CHECK(std::abs(f.t_p - 1.0) < 1e-12);
  }
}

TEST_CASE("s-polarization energy consistency at a lossless interface") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ed(1.0, 16.0);
  for (int n = 0; n < 50; ++n) {
    const Medium mi(Complex(ed(rng), 0.0)), mj(Complex(ed(rng), 0.0));
    const double kmin =
        std::min(mi.wavenumber(om).real(), mj.wavenumber(om).real());
    std::uniform_real_distribution<double> qd(0.0, 0.95 * kmin);
    const TransverseWaveVector q{qd(rng), 0.0};
    const auto f = fresnel(mi, mj, q, om);
    const double kzi = kz(q, mi, om).real(), kzj = kz(q, mj, om).real();
    const double flux = kzj / kzi * std::norm(f.t_s) + std::norm(f.r_s);
    CHECK(flux == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("surface-plasmon pole is flagged, not a crash") {
  // lossless metal at the ideal SPP wave vector
  const Medium mi(Complex(1.0, 0.0));
  const Medium mj(Complex(-2.0, 0.0));
  // SPP: q^2 = (w/c)^2 eps_i eps_j/(eps_i+eps_j) = (w/c)^2 * 2
  const double q = om / c0 * std::sqrt(2.0);
  const auto f = fresnel(mi, mj, {q, 0.0}, om);
  CHECK(f.p_pole);
}

TEST_CASE("gain media are rejected") {
  CHECK_THROWS_AS(Medium(Complex(2.0, -0.1)), std::invalid_argument);
}
