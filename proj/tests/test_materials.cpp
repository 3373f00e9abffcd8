#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "spdcfilm/errors.hpp"
#include "spdcfilm/materials.hpp"

using namespace spdcfilm;

TEST_CASE("built-in lookups reproduce the bundled constants") {
  const auto gaas = material_lookup("GaAs", 500e-9);
  CHECK(gaas.medium.epsilon.real() == doctest::Approx(17.63));
  CHECK(gaas.medium.epsilon.imag() == doctest::Approx(3.83));
  CHECK_FALSE(gaas.extrapolated);

  const auto sio2 = material_lookup("SiO2", 500e-9);
  CHECK(sio2.medium.epsilon.real() == doctest::Approx(2.14));

  CHECK(material_lookup("GaAs", 1000e-9).medium.epsilon.real() ==
        doctest::Approx(12.06));
  CHECK(material_lookup("SiO2", 1000e-9).medium.epsilon.real() ==
        doctest::Approx(2.10));

  for (double wl : {300e-9, 500e-9, 2e-6}) {
    const auto air = material_lookup("air", wl);
    CHECK(air.medium.epsilon == Complex(1.0, 0.0));
    CHECK_FALSE(air.extrapolated);
  }
}

TEST_CASE("interpolation is linear in wavelength") {
  const auto mid = material_lookup("GaAs", 750e-9);
  CHECK(mid.medium.epsilon.real() == doctest::Approx(0.5 * (17.63 + 12.06)));
  CHECK(mid.medium.epsilon.imag() == doctest::Approx(0.5 * 3.83));
  CHECK_FALSE(mid.extrapolated);
}

TEST_CASE("out-of-range lookups clamp to the endpoint and are flagged") {
  const auto low = material_lookup("GaAs", 400e-9);
  CHECK(low.extrapolated);
  CHECK(low.medium.epsilon.real() == doctest::Approx(17.63));

  const auto high = material_lookup("GaAs", 1.3e-6);
  CHECK(high.extrapolated);
  CHECK(high.medium.epsilon.real() == doctest::Approx(12.06));
}

TEST_CASE("unknown material raises a lookup error") {
  CHECK_THROWS_AS(material_lookup("unobtainium", 500e-9), LookupError);
}

TEST_CASE("dispersion files parse with comments and optional Im column") {
  const char* path = "test_dispersion.tmp";
  {
    std::ofstream out(path);
    out << "# wavelength_m  eps_re  [eps_im]\n";
    out << "400e-9 2.0\n";
    out << "600e-9 2.2 0.01  # inline comment\n";
    out << "\n";
    out << "800e-9 2.4 0.02\n";
  }
  MaterialTable t;
  t.load_dispersion_file("glass", path);
  CHECK(t.lookup("glass", 600e-9).medium.epsilon == Complex(2.2, 0.01));
  CHECK(t.lookup("glass", 500e-9).medium.epsilon.real() == doctest::Approx(2.1));
  CHECK(t.lookup("glass", 500e-9).medium.epsilon.imag() ==
        doctest::Approx(0.005));
  CHECK(t.lookup("glass", 900e-9).extrapolated);
  std::remove(path);
}

TEST_CASE("non-increasing wavelengths are rejected") {
  const char* path = "test_dispersion_bad.tmp";
  {
    std::ofstream out(path);
    out << "600e-9 2.0\n400e-9 2.2\n";
  }
  MaterialTable t;
  CHECK_THROWS_AS(t.load_dispersion_file("bad", path), LookupError);
  std::remove(path);
}
