#pragma once

#include <complex>

namespace spdcfilm {

using Complex = std::complex<double>;

inline constexpr double c0 = 299792458.0;  // vacuum speed of light, m/s
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr Complex iu{0.0, 1.0};

inline double deg2rad(double deg) { return deg * pi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / pi; }

}  // namespace spdcfilm
