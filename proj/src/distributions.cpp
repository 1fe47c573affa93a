#include "quadbound/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace quadbound {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

double g_crit2(double z) {
    if (z < 0.125 || z >= 0.25) throw std::domain_error("g_crit2: z must be in [1/8, 1/4)");
    return 4.0 * z * (1.0 - 4.0 * z) / 3.0;
}

double gtilde_crit(double Z) {
    if (Z < 2.0 / 9.0) throw std::domain_error("gtilde_crit: Z must be >= 2/9");
    return ((4.0 + 9.0 * Z) * std::sqrt(16.0 * Z + 9.0 * Z * Z) - 9.0 * Z * (4.0 + 3.0 * Z)) / 32.0;
}

double ghat_crit(double y) {
    if (y < 4.0 / 81.0) throw std::domain_error("ghat_crit: y must be >= 4/81");
    return gtilde_crit(std::sqrt(y));
}

double x_crit(double z) {
    if (z < 0.125 || z >= 0.25) throw std::domain_error("x_crit: z must be in [1/8, 1/4)");
    return (16.0 * z - 1.0 - std::sqrt(3.0 * (64.0 * z * z - 1.0))) / (2.0 * (1.0 - 4.0 * z));
}

double xtilde_crit(double Z) {
    if (Z < 2.0 / 9.0) throw std::domain_error("xtilde_crit: Z must be >= 2/9");
    double s = std::sqrt(Z * (16.0 + 9.0 * Z));
    double inner = 243.0 * Z * Z + 144.0 * Z - 32.0 + 3.0 * (27.0 * Z - 8.0) * s;
    return (27.0 * Z - 8.0 + 9.0 * s - std::sqrt(6.0) * std::sqrt(inner)) / 16.0;
}

double beta_crit(double z) {
    if (z < 0.125) throw std::domain_error("beta_crit: z must be >= 1/8");
    return 2.0 * std::sqrt(3.0) * std::sqrt(z - 0.125);
}

double beta_tilde_crit(double Z) {
    if (Z < 2.0 / 9.0) throw std::domain_error("beta_tilde_crit: Z must be >= 2/9");
    return 1.5 * std::sqrt(Z - 2.0 / 9.0);
}

double A_of_z(double z) {
    if (z <= 0 || z > 0.125) throw std::domain_error("A_of_z: z must be in (0, 1/8]");
    return (1.0 - std::sqrt(1.0 - 8.0 * z)) / (4.0 * z);
}

double Atilde_of_Z(double Z) {
    if (Z <= 0 || Z > 2.0 / 9.0) throw std::domain_error("Atilde_of_Z: Z must be in (0, 2/9]");
    return std::sqrt(2.0 / Z) * std::sin(std::asin(3.0 * std::sqrt(Z / 2.0)) / 3.0);
}

double Atilde0_of_Z(double Z) {
    if (Z <= 0 || Z > 2.0 / 9.0) throw std::domain_error("Atilde0_of_Z: Z must be in (0, 2/9]");
    // 2 sum_{p>=1} (2Z/3)^p (3p-3)!/(p!(2p-1)!)
    double sum = 0, term;
    double w = 1.0;
    for (long p = 1; p <= 4000; ++p) {
        w *= 2.0 * Z / 3.0;
        // (3p-3)!/(p!(2p-1)!) via incremental ratio would be cleaner; use lgamma
        double lg = std::lgamma(3.0 * p - 2.0) - std::lgamma(p + 1.0) - std::lgamma(2.0 * p);
        term = w * std::exp(lg);
        sum += term;
        if (term < 1e-18 * (1.0 + sum) && p > 4) break;
    }
    return 2.0 * sum;
}

double a_of_y(double y) {
    if (y <= 0 || y >= 4.0 / 81.0) throw std::domain_error("a_of_y: y must be in (0, 4/81)");
    double sum = 0, w = 1.0;
    for (long p = 1; p <= 8000; ++p) {
        w *= 4.0 * y / 9.0;
        double c1 = std::exp(std::lgamma(3.0 * p - 2.0) - std::lgamma(p + 1.0) - std::lgamma(2.0 * p));
        double c2 = std::exp(std::lgamma(3.0 * p) - std::lgamma(p + 1.0) - std::lgamma(2.0 * p + 1.0));
        double term = 2.0 * w * c1 * (2.0 * c1 + c2);
        sum += term;
        if (term < 1e-18 * (1.0 + sum) && p > 4) break;
    }
    return sum;
}

double b_of_y(double y) {
    if (y <= 0 || y >= 4.0 / 81.0) throw std::domain_error("b_of_y: y must be in (0, 4/81)");
    double sum = 0, w = 1.0;
    for (long p = 1; p <= 8000; ++p) {
        w *= 4.0 * y / 9.0;
        double c1 = std::exp(std::lgamma(3.0 * p - 2.0) - std::lgamma(p) - std::lgamma(2.0 * p));
        double c2 = std::exp(std::lgamma(3.0 * p) - std::lgamma(p + 1.0) - std::lgamma(2.0 * p + 1.0));
        double term = 6.0 * w * c1 * c2;
        sum += term;
        if (term < 1e-18 * (1.0 + sum) && p > 4) break;
    }
    return sum;
}

double mean_p_subcritical(double z) {
    if (z <= 0 || z >= 0.125) throw std::domain_error("mean_p_subcritical: z must be in (0, 1/8)");
    return 4.0 * z / ((1.0 - 8.0 * z) * (1.0 - std::sqrt(1.0 - 8.0 * z)));
}

double mean_p_supercritical_coeff(double z) {
    if (z <= 0.125 || z >= 0.25) throw std::domain_error("mean_p_supercritical_coeff: z in (1/8, 1/4)");
    return (8.0 * z - 1.0) / (1.0 - 4.0 * z);
}

// ---------------------------------------------------------------------------
// Gaussian-transform distributions

double phi(double D, const QuadratureConfig& cfg) {
    if (D < 0) throw std::domain_error("phi: D must be >= 0");
    if (D == 0) return 0.0;  // by continuity
    auto kernel = [&](cplx xi) { return F_kernel(D, branch_from_xi(xi)); };
    // weight i xi = -(xi/i)
    return -2.0 / kSqrtPi * gaussian_transform(kernel, 0.0, cfg).value;
}

double phi_z(long d, double z) {
    if (z <= 0.125 || z >= 0.25) throw std::domain_error("phi_z: z must be in (1/8, 1/4)");
    if (d < 0) return 0.0;
    double x = x_crit(z);
    double a = std::pow(x, static_cast<double>(d + 1)), b = std::pow(x, static_cast<double>(d + 2));
    return (1.0 - a) * (1.0 - b) / ((1.0 + a) * (1.0 + b));
}

double phi_tilde_Z(long d, double Z) {
    if (Z <= 2.0 / 9.0 || Z >= 1.0) throw std::domain_error("phi_tilde_Z: Z must be just above 2/9");
    if (d < 0) return 0.0;
    double x = xtilde_crit(Z);
    double A = (2.0 + x) / (1.0 + 2.0 * x);
    double xd = std::pow(x, static_cast<double>(d)), xd1 = xd * x;
    double pref = 27.0 * x * (1.0 + x + x * x) / ((2.0 + x) * (2.0 + x) * (1.0 + 2.0 * x) * (1.0 + 2.0 * x));
    return 1.0 - pref * (1.0 - (A - xd) * (A - xd1) / ((A + xd) * (A + xd1)));
}

double phibar(double D, double P, const QuadratureConfig& cfg) {
    if (P <= 0) throw std::domain_error("phibar: P must be positive");
    if (D < 0) throw std::domain_error("phibar: D must be >= 0");
    if (D == 0) return 0.0;
    auto kernel = [&](cplx xi) { return Hbar_core(D, P, branch_from_xi(xi)); };
    return 2.0 * std::sqrt(P) * gaussian_transform(kernel, P / 2.0, cfg).value;
}

double phibar_sa(double D, double P, const QuadratureConfig& cfg) { return phibar(D, 3.0 * P, cfg); }

double phihat(double D, double P, const QuadratureConfig& cfg) {
    if (P <= 0) throw std::domain_error("phihat: P must be positive");
    if (D < 0) throw std::domain_error("phihat: D must be >= 0");
    if (D == 0) return 0.0;
    auto kernel = [&](cplx xi) { return Hhat_core(D, P, branch_from_xi(xi)); };
    double pref = 18.0 * P * P * P * kSqrtPi / (1.0 + 18.0 * P * P);
    return pref * gaussian_transform(kernel, 3.0 * P, cfg).value;
}

double sigma1(double D, double P, const QuadratureConfig& cfg) {
    auto kernel = [&](cplx xi) { return f_kernel(D, branch_from_xi(xi)); };
    return 2.0 / (kSqrtPi * P) * gaussian_transform(kernel, P / 2.0, cfg).value;
}

double sigma2(double D, double P, const QuadratureConfig& cfg) {
    auto kernel = [&](cplx xi) {
        cplx f = f_kernel(D, branch_from_xi(xi));
        return f * f;
    };
    return 2.0 / (kSqrtPi * P) * gaussian_transform(kernel, P / 2.0, cfg).value;
}

double rho_bar_bound(double D, double P, const QuadratureConfig& cfg) {
    if (P <= 0 || D < 0) throw std::domain_error("rho_bar_bound: need P > 0, D >= 0");
    if (D == 0) return 0.0;
    double s1 = sigma1(D, P, cfg), s2 = sigma2(D, P, cfg);
    return 4.0 / (3.0 * P * P * P * P) * std::exp(-D * D / P) *
           ((2.0 * D * D * D - 3.0 * D * P) + (4.0 * D * D * P - 2.0 * P * P) * s1 +
            2.0 * D * P * P * s2);
}

double rho_tilde_bound(double delta, double P, const QuadratureConfig& cfg) {
    if (P <= 0 || delta < 0) throw std::domain_error("rho_tilde_bound: need P > 0, delta >= 0");
    if (delta == 0) return 0.0;
    double D = delta * std::sqrt(P);
    double st1 = std::sqrt(P) * sigma1(D, P, cfg);
    double st2 = P * sigma2(D, P, cfg);
    return 4.0 / (3.0 * P * P) * std::exp(-delta * delta) *
           ((2.0 * delta * delta * delta - 3.0 * delta) + (4.0 * delta * delta - 2.0) * st1 +
            2.0 * delta * st2);
}

double rho_tilde_joint(double delta, double u, double P, const QuadratureConfig& cfg) {
    if (P <= 0 || delta < 0 || u <= 0 || u >= 1)
        throw std::domain_error("rho_tilde_joint: need P > 0, delta >= 0, 0 < u < 1");
    if (delta == 0) return 0.0;
    double D = delta * std::sqrt(P);
    double st1 = std::sqrt(P) * sigma1(D, P, cfg);
    double st2 = P * sigma2(D, P, cfg);
    double uu = u * (1.0 - u);
    double pref = std::exp(-delta * delta / (4.0 * uu)) /
                  (6.0 * kSqrtPi * P * P * std::pow(u, 2.5) * std::pow(1.0 - u, 2.5));
    double d2 = delta * delta;
    return pref * ((d2 - 2.0 * u) * (d2 - 2.0 * (1.0 - u)) +
                   2.0 * delta * (d2 - 4.0 * uu) * st1 + 4.0 * d2 * uu * st2);
}

double mean_delta(double u, double P, const QuadratureConfig& cfg) {
    double uu = u * (1.0 - u);
    double dmax = 4.0 + 8.0 * std::sqrt(uu);
    return adaptive_simpson([&](double d) { return d <= 0 ? 0.0 : d * rho_tilde_joint(d, u, P, cfg); }, 0.0,
                            dmax, 1e-8);
}

double rho_bound_super(double D, double z) {
    if (z <= 0.125 || z >= 0.25) throw std::domain_error("rho_bound_super: z must be in (1/8, 1/4)");
    if (D < 0) return 0.0;
    double c = (1.0 - 4.0 * z) / (8.0 * z - 1.0);
    return 2.0 * D * c * std::exp(-D * D * c);
}

double rayleigh(double delta) { return delta <= 0 ? 0.0 : 2.0 * delta * std::exp(-delta * delta); }

double rho_tilde_bound_small_p(double delta) {
    if (delta <= 0) return 0.0;
    double d = delta, d2 = d * d;
    return 2.0 / 105.0 * std::exp(-d2) * (35.0 * d + 28.0 * d * d2 + 12.0 * d * d2 * d2 + 3.0 * d * d2 * d2 * d2);
}

double mean_delta_small_p(double u) {
    double uu = u * (1.0 - u);
    return 16.0 / 105.0 * std::sqrt(uu / M_PI) * (35.0 + 21.0 * uu + 36.0 * uu * uu);
}

double mean_delta_large_p(double u) { return 4.0 * std::sqrt(u * (1.0 - u) / M_PI); }

double phibar_large_p(double D, double P) {
    double t = std::tanh(std::sqrt(3.0) / 2.0 * D * std::sqrt(P));
    return t * t;
}

double phihat_large_p(double D, double P) {
    double t = std::tanh(std::sqrt(4.5) * D * std::sqrt(P));
    return t * t;
}

}  // namespace quadbound
