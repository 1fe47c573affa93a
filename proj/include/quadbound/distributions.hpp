#pragma once

#include "quadbound/quadrature.hpp"

namespace quadbound {

// Critical points of the three boundary ensembles. The continuum layer works
// in doubles; the exact layer never depends on it.
struct CriticalConstants {
    static constexpr double g_crit1 = 1.0 / 12.0;
    static constexpr double z_crit = 1.0 / 8.0;
    static constexpr double Z_crit = 2.0 / 9.0;
    static constexpr double y_crit = 4.0 / 81.0;
};

double g_crit2(double z);        // 4z(1-4z)/3, z >= 1/8
double gtilde_crit(double Z);    // Z >= 2/9
double ghat_crit(double y);      // = gtilde_crit(sqrt(y)), y >= 4/81
double x_crit(double z);         // 1/8 <= z < 1/4
double xtilde_crit(double Z);    // Z >= 2/9
double beta_crit(double z);      // 2 sqrt(3) sqrt(z - 1/8)
double beta_tilde_crit(double Z);  // (3/2) sqrt(Z - 2/9)
double A_of_z(double z);         // (1 - sqrt(1-8z))/(4z)
double Atilde_of_Z(double Z);    // sqrt(2/Z) sin(asin(3 sqrt(Z/2))/3)
double Atilde0_of_Z(double Z);   // companion series (hypergeometric sum)
double a_of_y(double y);         // loop-ensemble regular parts, y < 4/81
double b_of_y(double y);
double mean_p_subcritical(double z);     // 4z/((1-8z)(1-sqrt(1-8z))), z < 1/8
double mean_p_supercritical_coeff(double z);  // (8z-1)/(1-4z), per unit area

// cumulative two-point function of the scaling limit without boundary
double phi(double D, const QuadratureConfig& cfg = {});
// supercritical discrete bulk-boundary law, 1/8 < z < 1/4
double phi_z(long d, double z);
// self-avoiding analogue at Z > 2/9
double phi_tilde_Z(long d, double Z);
// critical fixed-perimeter bulk-boundary law
double phibar(double D, double P, const QuadratureConfig& cfg = {});
// self-avoiding boundary: same law with the perimeter renormalized by 3
double phibar_sa(double D, double P, const QuadratureConfig& cfg = {});
// bulk-loop law for a self-avoiding loop of rescaled half-length P
double phihat(double D, double P, const QuadratureConfig& cfg = {});

// sigma kernels of the boundary-boundary density (stabilized contour form)
double sigma1(double D, double P, const QuadratureConfig& cfg = {});
double sigma2(double D, double P, const QuadratureConfig& cfg = {});

// boundary-boundary densities in the critical regime
double rho_bar_bound(double D, double P, const QuadratureConfig& cfg = {});
double rho_tilde_bound(double delta, double P, const QuadratureConfig& cfg = {});
// joint law of (rescaled map distance, contour separation u)
double rho_tilde_joint(double delta, double u, double P, const QuadratureConfig& cfg = {});
// mean rescaled distance at contour separation u
double mean_delta(double u, double P, const QuadratureConfig& cfg = {});

// supercritical boundary-boundary density in unrescaled units
double rho_bound_super(double D, double z);
// Rayleigh law (P -> infinity limit of rho_tilde_bound)
double rayleigh(double delta);
// P -> 0 closed form of rho_tilde_bound
double rho_tilde_bound_small_p(double delta);
// P -> 0 / P -> infinity limits of mean_delta
double mean_delta_small_p(double u);
double mean_delta_large_p(double u);
// large-P tanh^2 forms
double phibar_large_p(double D, double P);
double phihat_large_p(double D, double P);

}  // namespace quadbound
