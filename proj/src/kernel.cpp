#include "quadbound/kernel.hpp"

#include <stdexcept>

namespace quadbound {

USeries KernelSeries::bracket(int l) const {
    USeries s(order_n);
    for (int j = 0; j < l && j <= order_n + 1; ++j)
        if (j < static_cast<int>(x_pow.size())) s += x_pow[static_cast<size_t>(j)];
    return s;
}

const USeries& KernelSeries::f_at(int d) const {
    if (d < 0 || d >= static_cast<int>(f.size()))
        throw std::out_of_range("KernelSeries: f_d beyond d_max");
    return f[static_cast<size_t>(d)];
}

const USeries& KernelSeries::R_ell_at(int l) const {
    if (l < 0 || l >= static_cast<int>(R_ell.size()))
        throw std::out_of_range("KernelSeries: R_l beyond d_max");
    return R_ell[static_cast<size_t>(l)];
}

KernelSeries build_kernel(int order_n, int order_p, int d_max) {
    if (order_n < 1 || order_p < 1) throw std::invalid_argument("build_kernel: orders must be >= 1");
    KernelSeries k;
    k.order_n = order_n;
    k.order_p = order_p;
    k.d_max = d_max < 0 ? order_n + 2 : d_max;

    const USeries g = USeries::variable(order_n);
    const USeries one = USeries::constant(order_n, 1);

    k.R = fixpoint_solve([&](const USeries& r) { return one + rat(3) * (g * (r * r)); }, one);
    k.x = fixpoint_solve(
        [&](const USeries& xx) { return g * (k.R * k.R) * (one + xx + xx * xx); }, USeries(order_n));

    if (!(k.R == one + rat(3) * (g * (k.R * k.R)))) throw std::runtime_error("kernel: R equation failed");
    if (!(k.x == g * (k.R * k.R) * (one + k.x + k.x * k.x)))
        throw std::runtime_error("kernel: x equation failed");

    k.x_pow.reserve(static_cast<size_t>(k.d_max) + 6);
    k.x_pow.push_back(one);
    for (int j = 1; j <= k.d_max + 5; ++j) k.x_pow.push_back(k.x_pow.back() * k.x);

    // W row by row: [z^p] W = R * sum_{a+b=p-1} [z^a]W [z^b]W
    std::vector<USeries> wrow(static_cast<size_t>(order_p) + 1, USeries(order_n));
    wrow[0] = one;
    for (int p = 1; p <= order_p; ++p) {
        USeries acc(order_n);
        for (int a = 0; a <= p - 1; ++a) acc += wrow[static_cast<size_t>(a)] * wrow[static_cast<size_t>(p - 1 - a)];
        wrow[static_cast<size_t>(p)] = k.R * acc;
    }
    k.W = BiSeries::from_z_rows(wrow, order_n);
    {
        BiSeries z = BiSeries::var_z(order_n, order_p);
        BiSeries check = BiSeries::constant(order_n, order_p, 1) + mul_g(z * (k.W * k.W), k.R);
        if (!(check == k.W)) throw std::runtime_error("kernel: W equation failed");
    }
    k.w = k.W - BiSeries::constant(order_n, order_p, 1);

    // lambda = x(w - x)/(1 - xw)
    {
        BiSeries xb = BiSeries::from_g_series(k.x, order_p);
        BiSeries num = mul_g(k.w - xb, k.x);
        BiSeries den = BiSeries::constant(order_n, order_p, 1) - mul_g(k.w, k.x);
        k.lambda = div_unit(num, den);
    }

    k.f.resize(static_cast<size_t>(k.d_max) + 2);
    k.f[0] = USeries(order_n);
    for (int d = 1; d <= k.d_max + 1; ++d)
        k.f[static_cast<size_t>(d)] = div_unit(k.x * k.bracket(d), k.bracket(d + 2));
    if (!(k.f[1] == g * (k.R * k.R))) throw std::runtime_error("kernel: f_1 != gR^2");

    k.R_ell.resize(static_cast<size_t>(k.d_max) + 4);
    k.R_ell[0] = USeries(order_n);  // [0] = 0
    for (int l = 1; l <= k.d_max + 3; ++l)
        k.R_ell[static_cast<size_t>(l)] =
            div_unit(k.R * (k.bracket(l) * k.bracket(l + 3)), k.bracket(l + 1) * k.bracket(l + 2));

    return k;
}

}  // namespace quadbound
