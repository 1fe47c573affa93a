#include "quadbound/erfcx.hpp"

#include <cmath>
#include <stdexcept>

namespace quadbound {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Weideman rational approximation of the Faddeeva function w(z), N = 40,
// valid in the closed upper half plane; erfcx(z) = w(iz).
constexpr double kWeidemanL = 5.3182958969449886163;
constexpr int kWeidemanN = 40;
constexpr double kWeidemanCoef[kWeidemanN] = {
    -1.899694947394927e-15,   1.12807356236440206e-15,  1.13576871989992417e-14,
    -5.40931028288214223e-15, -7.07408626028685552e-14, 1.37256205867155004e-14,
    4.53296667826067277e-13,  1.20314582193879876e-13,  -2.90768834218286692e-12,
    -2.72760231582004518e-12, 1.77144952140111919e-11,  3.47272670930455001e-11,
    -9.05512445092829269e-11, -3.56323398659765327e-10, 2.10860063470665179e-10,
    3.01778054000907085e-9,   3.24974651804369739e-9,   -1.83156167830404632e-8,
    -6.35177348504429108e-8,  1.41986423999356746e-8,   5.91213695189949385e-7,
    1.48356611322007799e-6,   -1.06601389849471439e-6,  -0.0000180074471447509572,
    -0.0000559130926424831822, -0.0000393936314548956873, 0.000439807015986966783,
    0.00270540563307379131,   0.0100481862427834241,    0.0292029164712418671,
    0.0718236177907433683,    0.155042638024794943,     0.29989437996150063,
    0.526652898827708639,     0.847217457659381822,     1.25638156757651324,
    1.72538308481797781,      2.20151379487831193,      2.61605415276186037,
    2.89962450938970525,
};

std::complex<double> faddeeva_weideman(std::complex<double> z) {
    // requires Im(z) >= 0
    const double L = kWeidemanL;
    std::complex<double> iz(-z.imag(), z.real());
    std::complex<double> Z = (L + iz) / (L - iz);
    std::complex<double> p = 0.0;
    for (double c : kWeidemanCoef) p = p * Z + c;
    std::complex<double> d = L - iz;
    return 2.0 * p / (d * d) + (1.0 / kSqrtPi) / d;
}

// Laplace continued fraction, accurate for large |z| with Re(z) >= 0
template <typename T>
T erfcx_cf(T z) {
    T f = z;
    for (int k = 30; k >= 1; --k) f = z + (0.5 * k) / f;
    return (1.0 / kSqrtPi) / f;
}

}  // namespace

double erfcx(double x) {
    if (x < 0) throw std::domain_error("erfcx: negative argument not supported");
    if (x > 6.0) return erfcx_cf(x);
    return std::exp(x * x) * std::erfc(x);
}

std::complex<double> erfcx(std::complex<double> z) {
    if (z.real() < -1e-12) throw std::domain_error("erfcx: Re(z) must be >= 0");
    if (std::norm(z) > 144.0) return erfcx_cf(z);
    // erfcx(z) = w(iz); iz lies in the upper half plane when Re(z) >= 0
    return faddeeva_weideman(std::complex<double>(-z.imag(), z.real()));
}

}  // namespace quadbound
