#pragma once

#include <vector>

#include "quadbound/biseries.hpp"
#include "quadbound/useries.hpp"

namespace quadbound {

/// The solved series underlying every discrete generating function:
/// R = 1 + 3gR^2, x = gR^2(1+x+x^2), W = 1 + zRW^2, w = W-1,
/// lambda = x(w-x)/(1-xw), the descent weights f_d = x[d]/[d+2] and the
/// constrained-tree series R_l = R [l][l+3]/([l+1][l+2]),
/// with [l] = (1-x^l)/(1-x).
struct KernelSeries {
    int order_n = 0;
    int order_p = 0;
    int d_max = 0;

    USeries R;
    USeries x;
    BiSeries W;
    BiSeries w;
    BiSeries lambda;
    std::vector<USeries> f;      // f[d] for 0 <= d <= d_max + 1
    std::vector<USeries> R_ell;  // R_ell[l] for 0 <= l <= d_max + 3
    std::vector<USeries> x_pow;  // x^j, enough powers for the tables

    // [l]_x = 1 + x + ... + x^{l-1}; valid for 0 <= l <= d_max + 3
    USeries bracket(int l) const;
    const USeries& f_at(int d) const;
    const USeries& R_ell_at(int l) const;
};

/// Builds the kernel at the given truncation orders. d_max < 0 selects the
/// default order_n + 2 (graph distances cannot exceed the area scale).
/// The defining equations are re-checked exactly; a failure throws.
KernelSeries build_kernel(int order_n, int order_p, int d_max = -1);

}  // namespace quadbound
