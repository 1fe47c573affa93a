#pragma once

#include <functional>

#include "quadbound/scaling_kernels.hpp"

namespace quadbound {

struct QuadratureConfig {
    double xi_max = 8.0;   // truncation of the Gaussian integral
    int nodes = 2048;      // trapezoid nodes on [0, xi_max]
    double tol = 1e-9;     // imaginary-residue / error target
};

struct TransformResult {
    double value = 0;
    double error_estimate = 0;  // trapezoid value vs half the nodes
    double imag_residual = 0;   // leftover imaginary part after symmetrization
};

/// Computes int_{-inf}^{inf} dxi (xi/i) e^{-xi^2} K(xi) along the contour
/// xi = t + i*shift. Oscillatory weight factors e^{i xi P} together with
/// their compensating exponentials must already be absorbed into the shift
/// and the kernel. Throws if the imaginary residue exceeds the tolerance.
TransformResult gaussian_transform(const std::function<cplx(cplx)>& kernel, double shift,
                                   const QuadratureConfig& cfg = {});

/// Adaptive Simpson on [a, b] for real integrands.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 40);

}  // namespace quadbound
