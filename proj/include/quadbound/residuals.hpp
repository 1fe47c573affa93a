#pragma once

namespace quadbound {

struct ResidualGrid {
    double lo = 0.2;
    double hi = 3.0;
    int points = 30;
    double step = 1e-4;  // finite-difference step
};

// max |dH/dD - H^2 + F + muB| over the D grid (centered differences)
double residual_ode_H(double mu, double muB, const ResidualGrid& grid = {});
// max |dG*/dD + 2 d(K G*)/dmuB| with K = (muB - sqrt(mu)/2) sqrt(muB + sqrt(mu))
double residual_pde_gstar(double mu, double muB, const ResidualGrid& grid = {});
// max |dP/dU - d^2P/dD^2 + F P| for the diffusion kernel on [lo,hi]^2
double residual_diffusion(double mu, const ResidualGrid& grid = {});
// max relative error of the Laplace relation between the fixed-weight and
// fixed-perimeter kernels at a few (D, mu, muB) sample points
double residual_laplace_hhbar(double mu, double muB, const ResidualGrid& grid = {});

}  // namespace quadbound
