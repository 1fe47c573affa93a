#include "quadbound/residuals.hpp"

#include <cmath>

#include "quadbound/quadrature.hpp"
#include "quadbound/scaling_kernels.hpp"

namespace quadbound {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// five-point centered stencils; truncation O(h^4)
template <typename F>
auto d1(F&& f, double x, double h) -> decltype(f(x)) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

template <typename F>
auto d2(F&& f, double x, double h) -> decltype(f(x)) {
    return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
           (12.0 * h * h);
}

}  // namespace

double residual_ode_H(double mu, double muB, const ResidualGrid& grid) {
    double worst = 0;
    for (int i = 0; i <= grid.points; ++i) {
        double D = grid.lo + (grid.hi - grid.lo) * i / grid.points;
        auto H = [&](double x) { return H_kernel(x, mu, muB); };
        cplx F = F_kernel(D, branch_from_mu(cplx(mu, 0)));
        cplx r = d1(H, D, grid.step) - H(D) * H(D) + F + muB;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double residual_pde_gstar(double mu, double muB, const ResidualGrid& grid) {
    double worst = 0;
    auto KG = [&](double D, double b) {
        cplx s = std::sqrt(cplx(mu, 0));
        cplx K = (b - s / 2.0) * std::sqrt(b + s);
        return K * Gstar_kernel(D, mu, b);
    };
    for (int i = 0; i <= grid.points; ++i) {
        double D = grid.lo + (grid.hi - grid.lo) * i / grid.points;
        cplx dD = d1([&](double x) { return Gstar_kernel(x, mu, muB); }, D, grid.step);
        cplx dB = d1([&](double b) { return KG(D, b); }, muB, grid.step);
        worst = std::max(worst, std::abs(dD + 2.0 * dB));
    }
    return worst;
}

double residual_diffusion(double mu, const ResidualGrid& grid) {
    double worst = 0;
    for (int i = 0; i <= grid.points; ++i) {
        double D = grid.lo + (grid.hi - grid.lo) * i / grid.points;
        double F = F_kernel(D, branch_from_mu(cplx(mu, 0))).real();
        for (int j = 0; j <= grid.points; ++j) {
            double U = grid.lo + (grid.hi - grid.lo) * j / grid.points;
            double dU = d1([&](double u) { return diffusion_kernel(D, u, mu); }, U, grid.step);
            double dDD = d2([&](double x) { return diffusion_kernel(x, U, mu); }, D, grid.step);
            worst = std::max(worst, std::abs(dU - dDD + F * diffusion_kernel(D, U, mu)));
        }
    }
    return worst;
}

double residual_laplace_hhbar(double mu, double muB, const ResidualGrid& grid) {
    // H(D; mu, muB) = sqrt(muB + sqrt(mu))
    //   + (1/2) int_0^inf dP e^{-muB P} ( e^{-sqrt(mu) P}/(sqrt(pi) P^{3/2}) - Hbar(D,P;mu) )
    double worst = 0;
    double s = std::sqrt(mu);
    for (int i = 0; i <= 4; ++i) {
        double D = grid.lo + (grid.hi - grid.lo) * i / 4.0;
        auto integrand = [&](double u) {
            // P = u^2 removes the endpoint singularity
            double P = u * u;
            if (P < 1e-12) return 0.0;
            double free_part = std::exp(-s * P) / (kSqrtPi * std::pow(P, 1.5));
            double hb = Hbar_full(D, P, cplx(mu, 0)).real();
            return std::exp(-muB * P) * (free_part - hb) * 2.0 * u;
        };
        double umax = std::sqrt(60.0 / (muB + s));
        double integral = adaptive_simpson(integrand, 0.0, umax, 1e-11);
        double lhs = H_kernel(D, cplx(mu, 0), cplx(muB, 0)).real();
        double rhs = std::sqrt(muB + s) + 0.5 * integral;
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    return worst;
}

}  // namespace quadbound
