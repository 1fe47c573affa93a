#pragma once

#include <complex>

namespace quadbound {

/// exp(x^2) erfc(x) for real x >= 0.
double erfcx(double x);

/// exp(z^2) erfc(z) for complex z with Re(z) >= 0.
std::complex<double> erfcx(std::complex<double> z);

}  // namespace quadbound
