#pragma once

#include <complex>

namespace quadbound {

using cplx = std::complex<double>;

/// Branch data for the Gaussian transforms: with mu = -xi^2 evaluated along
/// xi = t + i*shift, sqrt(mu) := -i xi and mu^{1/4} := principal sqrt of
/// that, which has nonnegative real part. This is the branch for which the
/// kernels approach their stated large-D limits.
struct BranchPoint {
    cplx s;  // sqrt(mu)
    cplx q;  // mu^{1/4}
};

BranchPoint branch_from_xi(cplx xi);
BranchPoint branch_from_mu(cplx mu);  // principal roots

// sqrt(3/2) q coth(sqrt(3/2) q D); overflow-safe for large Re of the argument
cplx f_kernel(double D, const BranchPoint& b);
// 2 (f^2 - sqrt(mu)) = sqrt(mu)(1 + 3/sinh^2(...))
cplx F_kernel(double D, const BranchPoint& b);

// f + (muB - s/2)/(sqrt(muB + s) + f), the cumulative bulk-boundary kernel
cplx H_kernel(double D, cplx mu, cplx muB);
// partial_D partial_muB H in closed form
cplx Gstar_kernel(double D, double mu, double muB);

// int_0^infty 2K exp(-K^2/P - 2 f K) dK = P (1 - sqrt(pi P) f erfcx(f sqrt(P)))
cplx inner_k_integral(double P, cplx f);
// the same by adaptive quadrature (cross-check path)
cplx inner_k_integral_quad(double P, cplx f, double tol = 1e-10);

// the kernel of the fixed-perimeter bulk-boundary transform, without the
// factor exp(-sqrt(mu) P) that is absorbed into the contour shift
cplx Hbar_core(double D, double P, const BranchPoint& b, bool quad_inner = false);
// with the exponential factor (for Laplace-transform checks at real mu)
cplx Hbar_full(double D, double P, cplx mu);

// loop analogue, without exp(-6 sqrt(mu) P)
cplx Hhat_core(double D, double P, const BranchPoint& b);

// diffusion kernel (e^{-sqrt(mu) U}/U^{5/2}) e^{-D^2/4U} (D^2 - 2U + 2UD f)
double diffusion_kernel(double D, double U, double mu);

}  // namespace quadbound
