#include "quadbound/identities.hpp"

#include <algorithm>

#include "quadbound/families.hpp"

namespace quadbound {

bool IdentityReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
}

namespace {

BiSeries cf_truncation(const KernelSeries& k, int d, int depth) {
    // 1/(1 - zR_{d+1}/(1 - zR_{d+2}/...)), cut after `depth` levels
    BiSeries one = BiSeries::constant(k.order_n, k.order_p, 1);
    BiSeries z = BiSeries::var_z(k.order_n, k.order_p);
    BiSeries v = one;
    for (int j = depth; j >= 1; --j) v = div_unit(one, one - mul_g(z * v, k.R_ell_at(d + j)));
    return v;
}

}  // namespace

IdentityReport verify_identities(int order_n, int order_p, int d_max) {
    KernelSeries k = build_kernel(order_n, order_p, d_max + 2);
    IdentityReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.items.push_back({name, pass, detail});
    };

    const BiSeries one = BiSeries::constant(order_n, order_p, 1);
    const BiSeries z = BiSeries::var_z(order_n, order_p);
    const BiSeries g = BiSeries::var_g(order_n, order_p);

    std::vector<BiSeries> Wd;
    for (int d = 0; d <= d_max + 2; ++d) Wd.push_back(series_family(k, {Family::Wd, d}));

    {
        bool ok = true;
        for (int d = 0; d <= d_max && ok; ++d) {
            BiSeries rhs = one + mul_g(z * (Wd[d] * Wd[d + 1]), k.R_ell_at(d + 1));
            ok = (Wd[d] == rhs);
        }
        add("recursion W_d = 1 + z R_{d+1} W_d W_{d+1}", ok);
    }
    {
        BiSeries rhs = k.W - mul_g(g * z * (k.W * (k.W * k.W)), k.R * (k.R * k.R));
        bool ok = true;
        for (int d = 0; d <= d_max && ok; ++d) {
            BiSeries lhs = Wd[d] - mul_g(g * z * (Wd[d] * (Wd[d + 1] * Wd[d + 2])),
                                         k.R_ell_at(d) * (k.R_ell_at(d + 1) * k.R_ell_at(d + 2)));
            ok = (lhs == rhs);
        }
        add("conserved quantity W_d - gz R_d R_{d+1} R_{d+2} W_d W_{d+1} W_{d+2}", ok);
    }
    {
        bool ok = true;
        for (int d = 0; d <= std::min(d_max, 2) && ok; ++d)
            ok = (cf_truncation(k, d, order_p + 1) == Wd[d]);
        add("continued-fraction truncation reproduces W_d", ok);
    }
    {
        BiSeries w0 = series_family(k, {Family::W0});
        BiSeries zsub = z * (w0 * w0);
        BiSeries wt0 = series_family(k, {Family::TildeW0});
        bool ok = substitute_boundary_weight(wt0, zsub) == w0;
        add("substitution Wtilde_0(g, zW_0^2) = W_0(g, z)", ok);

        bool ok2 = true;
        for (int d = 1; d <= d_max && ok2; ++d) {
            BiSeries wtd = series_family(k, {Family::TildeWd, d});
            BiSeries lhs = Wd[d] - w0;
            BiSeries rhs = w0 * (substitute_boundary_weight(wtd, zsub) - substitute_boundary_weight(wt0, zsub));
            ok2 = (lhs == rhs);
        }
        add("substitution W_d - W_0 = W_0 (Wtilde_d - Wtilde_0)", ok2);
    }
    {
        bool ok = true;
        for (long p = 1; p <= order_p && ok; ++p) {
            Rational lhs = 0;
            for (long kk = 1; kk <= p; ++kk)
                lhs += rat(pow_int(3, kk) * Int(2 * kk + 1) * factorial(3 * p - kk),
                           factorial(p - kk) * factorial(2 * p + 1));
            Rational rhs = rat(Int(3) * factorial(3 * p), factorial(p - 1) * factorial(2 * p + 1));
            ok = (lhs == rhs);
        }
        add("summation identity sum_k 3^k (2k+1)(3p-k)!/(p-k)! = 3 (3p)!/(p-1)!", ok);
    }
    {
        bool ok = true;
        for (long n = 0; n <= order_n && ok; ++n)
            for (long p = 1; p <= order_p && ok; ++p) {
                Rational lhs = rat(closed_count({CountFamily::W, n, p}) * Int(2 * p),
                                   closed_count({CountFamily::W0, n, p}) * Int(n + p + 1));
                ok = (lhs == rat(2 * p, p + 1));
            }
        add("closest-edge ratio 2p/(p+1), independent of n", ok);
    }
    {
        // telescoping: sum_{d<=D} G_d = log W_D; G-coefficients nonnegative
        bool ok = true;
        BiSeries acc(order_n, order_p);
        for (int d = 0; d <= d_max && ok; ++d) {
            BiSeries gd = series_family(k, {Family::Gd, d});
            for (int nn = 0; nn <= order_n && ok; ++nn)
                for (int pp = 0; pp <= order_p && ok; ++pp) ok = gd.coeff(nn, pp) >= 0;
            acc += gd;
            ok = ok && (acc == log_unit(Wd[d]));
        }
        add("telescoping sum of G_d = log W_d with nonnegative coefficients", ok);
    }
    {
        // cyclic-sequence identity: log W_d = sum_{k>=1} (z R_{d+1} W_{d+1})^k / k
        bool ok = true;
        for (int d = 0; d <= std::min(d_max, 2) && ok; ++d) {
            BiSeries t = mul_g(z * Wd[d + 1], k.R_ell_at(d + 1));
            BiSeries pw = one;
            BiSeries acc(order_n, order_p);
            for (int kk = 1; kk <= order_p + 1; ++kk) {
                pw *= t;
                acc += rat(1, kk) * pw;
            }
            ok = (acc == log_unit(Wd[d]));
        }
        add("cyclic weight sum_k (z R_{d+1} W_{d+1})^k / k = log W_d", ok);
    }
    return rep;
}

}  // namespace quadbound
