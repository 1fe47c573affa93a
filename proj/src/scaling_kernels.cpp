#include "quadbound/scaling_kernels.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "quadbound/erfcx.hpp"

namespace quadbound {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
const double kSqrt32 = std::sqrt(1.5);

// coth(a) and 1/sinh^2(a) with Re(a) >= 0, switching to scaled exponentials
// once Re(a) is large enough that sinh would overflow double range
struct CothPair {
    cplx coth;
    cplx inv_sinh_sq;
};

CothPair coth_pair(cplx a) {
    if (std::abs(a) < 1e-4) {
        // coth a = 1/a + a/3 - a^3/45, 1/sinh^2 a = 1/a^2 - 1/3 + a^2/15
        cplx a2 = a * a;
        return {1.0 / a + a / 3.0 - a * a2 / 45.0, 1.0 / a2 - 1.0 / 3.0 + a2 / 15.0};
    }
    if (a.real() > 30.0) {
        cplx e2 = std::exp(-2.0 * a);
        cplx den = 1.0 - e2;
        cplx coth = (1.0 + e2) / den;
        cplx inv = 4.0 * e2 / (den * den);
        return {coth, inv};
    }
    cplx sh = std::sinh(a);
    return {std::cosh(a) / sh, 1.0 / (sh * sh)};
}

}  // namespace

BranchPoint branch_from_xi(cplx xi) {
    cplx s = cplx(0.0, -1.0) * xi;
    cplx q = std::sqrt(s);
    if (q.real() < 0) q = -q;  // principal already has Re >= 0; keep it so
    return {s, q};
}

BranchPoint branch_from_mu(cplx mu) {
    cplx s = std::sqrt(mu);
    cplx q = std::sqrt(s);
    return {s, q};
}

cplx f_kernel(double D, const BranchPoint& b) {
    if (D <= 0) throw std::domain_error("f_kernel: D must be positive");
    cplx a = kSqrt32 * b.q * D;
    if (std::abs(a) < 1e-6)  // small-argument series, finite at mu = 0
        return 1.0 / D + b.s * D / 2.0 - b.s * b.s * D * D * D / 20.0;
    return kSqrt32 * b.q * coth_pair(a).coth;
}

cplx F_kernel(double D, const BranchPoint& b) {
    if (D <= 0) throw std::domain_error("F_kernel: D must be positive");
    cplx a = kSqrt32 * b.q * D;
    if (std::abs(a) < 1e-6) {
        cplx f = f_kernel(D, b);
        return 2.0 * (f * f - b.s);
    }
    return b.s * (1.0 + 3.0 * coth_pair(a).inv_sinh_sq);
}

cplx H_kernel(double D, cplx mu, cplx muB) {
    BranchPoint b = branch_from_mu(mu);
    cplx f = f_kernel(D, b);
    return f + (muB - b.s / 2.0) / (std::sqrt(muB + b.s) + f);
}

cplx Gstar_kernel(double D, double mu, double muB) {
    BranchPoint b = branch_from_mu(cplx(mu, 0));
    cplx f = f_kernel(D, b);
    cplx sigma = std::sqrt(muB + b.s);
    cplx den = sigma + f;
    cplx fprime = 1.5 * b.s - f * f;  // dd/dD of the coth kernel
    cplx N = muB - b.s / 2.0;
    return -fprime / (den * den) + N * fprime / (sigma * den * den * den);
}

cplx inner_k_integral(double P, cplx f) {
    double sp = std::sqrt(P);
    return P * (1.0 - kSqrtPi * sp * f * erfcx(f * sp));
}

cplx inner_k_integral_quad(double P, cplx f, double tol) {
    // adaptive Simpson on [0, K_max]; the integrand decays like e^{-K^2/P}
    double kmax = 8.0 * std::sqrt(P) + 8.0 / std::max(0.3, std::abs(f.real()));
    auto fn = [&](double K) { return 2.0 * K * std::exp(cplx(-K * K / P, 0.0) - 2.0 * f * K); };
    std::function<cplx(double, double, cplx, cplx, cplx, double, int)> rec =
        [&](double a, double bb, cplx fa, cplx fb, cplx fm, double eps, int depth) -> cplx {
        double m = 0.5 * (a + bb);
        double lm = 0.5 * (a + m), rm = 0.5 * (m + bb);
        cplx flm = fn(lm), frm = fn(rm);
        cplx whole = (bb - a) / 6.0 * (fa + 4.0 * fm + fb);
        cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        cplx right = (bb - m) / 6.0 * (fm + 4.0 * frm + fb);
        cplx d = left + right - whole;
        double floor = 1e-13 * (std::abs(left) + std::abs(right) + 1e-300);
        if (depth <= 0 || std::abs(d) < 15.0 * eps || std::abs(d) < floor) return left + right + d / 15.0;
        return rec(a, m, fa, fm, flm, eps / 2, depth - 1) + rec(m, bb, fm, fb, frm, eps / 2, depth - 1);
    };
    cplx fa = fn(0.0), fb = fn(kmax), fm = fn(0.5 * kmax);
    return rec(0.0, kmax, fa, fb, fm, tol, 22);
}

cplx Hbar_core(double D, double P, const BranchPoint& b, bool quad_inner) {
    cplx f = f_kernel(D, b);
    cplx I = quad_inner ? inner_k_integral_quad(P, f) : inner_k_integral(P, f);
    return (1.0 / (kSqrtPi * P * std::sqrt(P))) * (1.0 + (3.0 * b.s - 2.0 * f * f) * I);
}

cplx Hbar_full(double D, double P, cplx mu) {
    BranchPoint b = branch_from_mu(mu);
    return std::exp(-b.s * P) * Hbar_core(D, P, b);
}

cplx Hhat_core(double D, double P, const BranchPoint& b) {
    cplx f = f_kernel(D, b);
    double sp3 = std::sqrt(3.0 * P);
    cplx I3 = 3.0 * P * (1.0 - kSqrtPi * sp3 * f * erfcx(f * sp3));
    double c = 3.0 / (M_PI * 81.0 * P * P * P * P);
    return c * (1.0 + 3.0 * P * b.s) * (1.0 + (3.0 * b.s - 2.0 * f * f) * I3);
}

double diffusion_kernel(double D, double U, double mu) {
    BranchPoint b = branch_from_mu(cplx(mu, 0));
    double f = f_kernel(D, b).real();
    double s = b.s.real();
    return std::exp(-s * U) / std::pow(U, 2.5) * std::exp(-D * D / (4.0 * U)) *
           (D * D - 2.0 * U + 2.0 * U * D * f);
}

}  // namespace quadbound
