#include "quadbound/families.hpp"

#include <stdexcept>

namespace quadbound {

namespace {

// ballot number C(s,d) = binom(s,(s-d)/2) - binom(s,(s-d)/2-1)
Int ballot(int s, int d) {
    if (s < 0 || d < 0 || (s - d) % 2 != 0) return 0;
    long k = (s - d) / 2;
    return binomial(s, k) - binomial(s, k - 1);
}

BiSeries one_like(const KernelSeries& k) { return BiSeries::constant(k.order_n, k.order_p, 1); }

BiSeries wd_series(const KernelSeries& k, int d) {
    if (d < 0) return one_like(k);
    if (d > k.d_max) throw std::out_of_range("series_family: d exceeds d_max");
    BiSeries num = k.W - mul_g(k.W * k.w, k.f_at(d + 1));
    BiSeries den = one_like(k) - mul_g(k.w, k.f_at(d));
    return div_unit(num, den);
}

BiSeries w0_series(const KernelSeries& k) {
    return k.W - mul_g(k.W * k.w, k.f_at(1));
}

BiSeries td_series(const KernelSeries& k, int d) {
    if (d == 0) {
        BiSeries w0 = w0_series(k);
        return w0 * w0 - w0;
    }
    if (d > k.d_max) throw std::out_of_range("series_family: d exceeds d_max");
    // T_d = W^2 w^d (f_1/f_{d+1}) (1 - w f_{d+1})^2,  f_1/f_{d+1} = [d+3]/([3][d+1])
    USeries ratio = div_unit(k.bracket(d + 3), k.bracket(3) * k.bracket(d + 1));
    BiSeries wd = one_like(k);
    for (int i = 0; i < d; ++i) wd *= k.w;
    BiSeries u = one_like(k) - mul_g(k.w, k.f_at(d + 1));
    return mul_g((k.W * k.W) * (wd * (u * u)), ratio);
}

// rows of wtilde = Wtilde - 1 as Z-row g-series, from R Z = wt - 2 f1 wt^2 + f1^2 wt^3
std::vector<USeries> wtilde_rows(const KernelSeries& k) {
    const int P = k.order_p;
    const USeries f1 = k.f_at(1);
    const USeries f1sq = f1 * f1;
    std::vector<USeries> wt(static_cast<size_t>(P) + 1, USeries(k.order_n));
    for (int p = 1; p <= P; ++p) {
        USeries sq(k.order_n), cb(k.order_n);
        for (int a = 1; a <= p - 1; ++a) sq += wt[static_cast<size_t>(a)] * wt[static_cast<size_t>(p - a)];
        for (int a = 1; a <= p - 2; ++a)
            for (int b = 1; a + b <= p - 1; ++b)
                cb += wt[static_cast<size_t>(a)] * (wt[static_cast<size_t>(b)] * wt[static_cast<size_t>(p - a - b)]);
        USeries target = (p == 1) ? k.R : USeries(k.order_n);
        wt[static_cast<size_t>(p)] = target + rat(2) * (f1 * sq) - f1sq * cb;
    }
    return wt;
}

struct TildeStack {
    BiSeries wt;       // Wtilde - 1
    BiSeries wtilde0;  // Wtilde_0
    BiSeries unit;     // 1/(1 - f1 wt)
};

TildeStack tilde_stack(const KernelSeries& k) {
    TildeStack t;
    t.wt = BiSeries::from_z_rows(wtilde_rows(k), k.order_n);
    BiSeries one = one_like(k);
    BiSeries m = one - mul_g(t.wt, k.f_at(1));
    t.wtilde0 = (one + t.wt) * m;
    t.unit = div_unit(one, m);
    return t;
}

BiSeries tilde_wd_core(const KernelSeries& k, const TildeStack& t, int d) {
    // (1/(1 - f1 wt)) (1 - wt f_{d+1})/(1 - wt f_d); equals 1 at d = 0... no:
    // at d = 0 it is (1 - wt f_1)/(1 - f1 wt) / 1 = 1.
    if (d > k.d_max) throw std::out_of_range("series_family: d exceeds d_max");
    BiSeries one = one_like(k);
    BiSeries num = one - mul_g(t.wt, k.f_at(d + 1));
    BiSeries den = one - mul_g(t.wt, k.f_at(d));
    return t.unit * div_unit(num, den);
}

BiSeries omega_series(const KernelSeries& k, int d, bool gamma_zero_form) {
    // sum_{p>=1} y^p (Wtilde_0|_{Z^p}) * (Wtilde'_d|_{Z^p}); Hadamard product in p.
    std::vector<USeries> rows(static_cast<size_t>(k.order_p) + 1, USeries(k.order_n));
    for (int p = 1; p <= k.order_p; ++p) {
        USeries a = coeff_zp(k, CoeffFamily::TildeWd, 0, p);  // Wtilde_0 row
        USeries b = gamma_zero_form ? a : coeff_zp(k, CoeffFamily::TildeWdPrime, d, p);
        rows[static_cast<size_t>(p)] = a * b;
    }
    return BiSeries::from_z_rows(rows, k.order_n);
}

}  // namespace

BiSeries series_family(const KernelSeries& k, const FamilySpec& spec) {
    switch (spec.family) {
        case Family::W0:
            return w0_series(k);
        case Family::Wd:
            return wd_series(k, spec.d);
        case Family::Gd: {
            if (spec.d < 0) throw std::invalid_argument("series_family: d must be >= 0");
            BiSeries a = log_unit(wd_series(k, spec.d));
            if (spec.d == 0) return a;
            return a - log_unit(wd_series(k, spec.d - 1));
        }
        case Family::Td:
            if (spec.d < 0) throw std::invalid_argument("series_family: d must be >= 0");
            return td_series(k, spec.d);
        case Family::TdSS: {
            const int s = spec.s, sp = spec.s_prime, d = spec.d;
            if (s < 0 || sp < 0 || d <= 0) throw std::invalid_argument("series_family: TdSS needs s,s' >= 0, d > 0");
            if ((s + sp) % 2 != 0) throw std::invalid_argument("series_family: TdSS needs s+s' even");
            const int p = (s + sp) / 2;
            BiSeries zero(k.order_n, k.order_p);
            if ((s - d) % 2 != 0 || (sp - d) % 2 != 0) return zero;  // vanishes off-parity
            if (d > k.d_max) throw std::out_of_range("series_family: d exceeds d_max");
            const USeries f1 = k.f_at(1);
            USeries ratio = div_unit(k.bracket(d + 3), k.bracket(3) * k.bracket(d + 1));  // f1/f_{d+1}
            USeries acc = rat(ballot(s, d) * ballot(sp, d), 1) * ratio;
            acc -= rat(ballot(s, d) * ballot(sp, d + 2) + ballot(s, d + 2) * ballot(sp, d), 1) * f1;
            acc += rat(ballot(s, d + 2) * ballot(sp, d + 2), 1) * (f1 * k.f_at(d + 1));
            USeries rp = USeries::constant(k.order_n, 1);
            for (int i = 0; i < p; ++i) rp *= k.R;
            return BiSeries::from_g_series(rp * acc, k.order_p);
        }
        case Family::TildeW0:
            return tilde_stack(k).wtilde0;
        case Family::TildeWd: {
            TildeStack t = tilde_stack(k);
            return tilde_wd_core(k, t, spec.d) + t.wtilde0 - one_like(k);
        }
        case Family::TildeWdPrime: {
            TildeStack t = tilde_stack(k);
            return log_unit(tilde_wd_core(k, t, spec.d)) + t.wtilde0 - one_like(k);
        }
        case Family::TildeGd: {
            if (spec.d < 0) throw std::invalid_argument("series_family: d must be >= 0");
            TildeStack t = tilde_stack(k);
            if (spec.d == 0) return t.wtilde0 - one_like(k);
            return log_unit(tilde_wd_core(k, t, spec.d)) - log_unit(tilde_wd_core(k, t, spec.d - 1));
        }
        case Family::OmegaD:
            if (spec.d < 0) throw std::invalid_argument("series_family: d must be >= 0");
            return omega_series(k, spec.d, false);
        case Family::GammaD: {
            if (spec.d < 0) throw std::invalid_argument("series_family: d must be >= 0");
            if (spec.d == 0) return omega_series(k, 0, true);
            return omega_series(k, spec.d, false) - omega_series(k, spec.d - 1, false);
        }
    }
    throw std::logic_error("series_family: unknown family");
}

Int closed_count(const CountQuery& q) {
    if (q.n < 0 || q.p < 1) throw std::invalid_argument("closed_count: need n >= 0, p >= 1");
    const long n = q.n, p = q.p;
    switch (q.family) {
        case CountFamily::W0: {
            Rational r = rat(pow_int(3, n) * factorial(2 * p) * factorial(2 * n + p - 1),
                             factorial(p) * factorial(p - 1) * factorial(n) * factorial(n + p + 1));
            return to_integer(r);
        }
        case CountFamily::W: {
            Rational r = rat(pow_int(3, n) * factorial(2 * p) * factorial(2 * n + p - 1),
                             factorial(p - 1) * factorial(p + 1) * factorial(n) * factorial(n + p));
            return to_integer(r);
        }
        case CountFamily::TildeW0: {
            if (p > n + 1) return 0;  // self-avoiding boundaries need p <= n+1
            Rational r = rat(pow_int(3, n) * factorial(3 * p) * factorial(2 * n + p - 1),
                             pow_int(3, p) * factorial(p) * factorial(2 * p - 1) * factorial(n - p + 1) *
                                 factorial(n + 2 * p));
            return to_integer(r);
        }
    }
    throw std::logic_error("closed_count: unknown family");
}

namespace {

USeries r_pow(const KernelSeries& k, int p) {
    USeries r = USeries::constant(k.order_n, 1);
    for (int i = 0; i < p; ++i) r *= k.R;
    return r;
}

USeries g_r3_pow(const KernelSeries& k, int p) {
    USeries gr3 = USeries::variable(k.order_n) * (k.R * (k.R * k.R));
    USeries r = USeries::constant(k.order_n, 1);
    for (int i = 0; i < p; ++i) r *= gr3;
    return r;
}

USeries tilde_w0_row(const KernelSeries& k, int p) {
    if (p == 0) return USeries::constant(k.order_n, 1);
    // (gR^3)^p (3p-3)!/(p!(2p-1)!) (p/(gR^2) + 2 - 3p)
    Rational c0 = rat(factorial(3 * p - 3), factorial(p) * factorial(2 * p - 1));
    USeries a = (rat(p, 1) * c0) * (g_r3_pow(k, p - 1) * k.R);
    USeries b = (rat(2 - 3 * p, 1) * c0) * g_r3_pow(k, p);
    return a + b;
}

}  // namespace

USeries w_inf_row(const KernelSeries& k, int p) {
    return rat(factorial(2 * p), factorial(p) * factorial(p + 1)) * r_pow(k, p);
}

USeries log_w_inf_row(const KernelSeries& k, int p) {
    return rat(factorial(2 * p - 1), factorial(p) * factorial(p)) * r_pow(k, p);
}

USeries coeff_zp(const KernelSeries& k, CoeffFamily family, int d, int p) {
    if (p < 0) throw std::invalid_argument("coeff_zp: p must be >= 0");
    switch (family) {
        case CoeffFamily::Wd: {
            if (p == 0) return USeries::constant(k.order_n, 1);
            if (d < 0) return p == 0 ? USeries::constant(k.order_n, 1) : USeries(k.order_n);
            const USeries& fd = k.f_at(d);
            USeries diff = k.f_at(d + 1) - fd;
            USeries sum(k.order_n);
            USeries fpow = USeries::constant(k.order_n, 1);
            for (int kk = 1; kk <= p; ++kk) {
                sum += rat(factorial(2 * p) * Int(2 * kk + 1), factorial(p - kk) * factorial(p + kk + 1)) * fpow;
                fpow *= fd;
            }
            USeries body = USeries::constant(k.order_n, rat(factorial(2 * p), factorial(p) * factorial(p + 1))) -
                           diff * sum;
            return r_pow(k, p) * body;
        }
        case CoeffFamily::LogWd: {
            if (p == 0) return USeries(k.order_n);
            if (d < 0) return USeries(k.order_n);
            USeries sum(k.order_n);
            USeries fpow_hi = USeries::constant(k.order_n, 1), fpow_lo = fpow_hi;
            for (int kk = 1; kk <= p; ++kk) {
                fpow_hi *= k.f_at(d + 1);
                fpow_lo *= k.f_at(d);
                sum += rat(factorial(2 * p - 1), factorial(p - kk) * factorial(p + kk)) * (fpow_hi - fpow_lo);
            }
            USeries body = USeries::constant(k.order_n, rat(factorial(2 * p - 1), factorial(p) * factorial(p))) -
                           rat(2) * sum;
            return r_pow(k, p) * body;
        }
        case CoeffFamily::Td: {
            if (d < 0) throw std::invalid_argument("coeff_zp: Td needs d >= 0");
            if (p == 0) return USeries(k.order_n);
            if (d == 0) {
                // (W_0^2 - W_0)|_{z^p} with W_0|_{z^p} = R^p (2p)!/(p!(p+2)!)(2 + p(2-R))
                auto w0row = [&](int q) {
                    if (q == 0) return USeries::constant(k.order_n, 1);
                    // 2 + q(2-R) = 2 + 2q - qR
                    USeries body = USeries::constant(k.order_n, rat(2 + 2 * q, 1)) - rat(q, 1) * k.R;
                    return rat(factorial(2 * q), factorial(q) * factorial(q + 2)) * (r_pow(k, q) * body);
                };
                USeries acc(k.order_n);
                for (int a = 0; a <= p; ++a) acc += w0row(a) * w0row(p - a);
                return acc - w0row(p);
            }
            if (d > p) return USeries(k.order_n);  // distance can't exceed half-perimeter
            const USeries f1 = k.f_at(1);
            USeries ratio = div_unit(k.bracket(d + 3), k.bracket(3) * k.bracket(d + 1));  // f1/f_{d+1}
            auto cfr = [&](long a, long b) -> Rational {
                if (a < 0 || b < 0) return rat(0);
                return rat(factorial(2 * p + 1), factorial(a) * factorial(b));
            };
            USeries acc = (rat(2 * (d + 1), 1) * cfr(p - d, p + d + 2)) * ratio;
            acc -= (rat(4 * (d + 2), 1) * cfr(p - d - 1, p + d + 3)) * f1;
            acc += (rat(2 * (d + 3), 1) * cfr(p - d - 2, p + d + 4)) * (f1 * k.f_at(d + 1));
            return r_pow(k, p) * acc;
        }
        case CoeffFamily::TildeWd: {
            if (d < 0) throw std::invalid_argument("coeff_zp: TildeWd needs d >= 0");
            if (p == 0) return USeries::constant(k.order_n, 1);
            // (gR^3)^p { (3p)!/(p!(2p+1)!) - sum_k c_k x^d (1+x)[3]^k [d]^{k-1} / ([d+3][d+2]^k) } + row0
            USeries sum(k.order_n);
            const USeries br3 = k.bracket(3), brd = k.bracket(d), brd2 = k.bracket(d + 2), brd3 = k.bracket(d + 3);
            const USeries one = USeries::constant(k.order_n, 1);
            USeries num = k.x_pow[static_cast<size_t>(d)] * (one + k.x) * br3;  // k = 1 numerator
            USeries den = brd3 * brd2;
            for (int kk = 1; kk <= p; ++kk) {
                Rational c = rat(factorial(3 * p - kk) * Int(2 * kk + 1), factorial(p - kk) * factorial(2 * p + 1));
                sum += c * div_unit(num, den);
                if (kk < p) {
                    num *= br3 * brd;
                    den *= brd2;
                }
            }
            USeries body = USeries::constant(k.order_n, rat(factorial(3 * p), factorial(p) * factorial(2 * p + 1))) -
                           sum;
            return g_r3_pow(k, p) * body + tilde_w0_row(k, p);
        }
        case CoeffFamily::TildeWdPrime: {
            if (d < 0) throw std::invalid_argument("coeff_zp: TildeWdPrime needs d >= 0");
            if (p == 0) return USeries(k.order_n);
            // ratios (f_d/f_1) = [d][3]/[d+2]
            USeries rhi = div_unit(k.bracket(d + 1) * k.bracket(3), k.bracket(d + 3));
            USeries rlo = div_unit(k.bracket(d) * k.bracket(3), k.bracket(d + 2));
            USeries sum(k.order_n);
            USeries hi = USeries::constant(k.order_n, 1), lo = hi;
            for (int kk = 1; kk <= p; ++kk) {
                hi *= rhi;
                lo *= rlo;
                sum += rat(factorial(3 * p - kk - 1), factorial(p - kk) * factorial(2 * p)) * (hi - lo);
            }
            USeries body = USeries::constant(k.order_n, rat(factorial(3 * p - 1), factorial(p) * factorial(2 * p))) -
                           rat(2) * sum;
            return g_r3_pow(k, p) * body + tilde_w0_row(k, p);
        }
    }
    throw std::logic_error("coeff_zp: unknown family");
}

namespace {

Rational coeff_at_n(const USeries& u, long n) {
    if (n > u.order()) throw std::out_of_range("pmf_exact: n beyond truncation order");
    return u.coeff(static_cast<int>(n));
}

}  // namespace

std::vector<Rational> pmf_exact_all(const KernelSeries& k, const Ensemble& e, Statistic stat) {
    if (e.n > k.order_n) throw std::out_of_range("pmf_exact: n beyond truncation order");
    if (e.type == Ensemble::Type::FixedNP && e.p > k.order_p)
        throw std::out_of_range("pmf_exact: p beyond truncation order");
    if (e.type == Ensemble::Type::FixedZ && !(e.z > 0 && e.z < rat(1, 4)))
        throw std::domain_error("pmf_exact: z must lie in (0, 1/4)");

    std::vector<long> ps;
    std::vector<Rational> zw;
    if (e.type == Ensemble::Type::FixedNP) {
        ps = {e.p};
        zw = {rat(1)};
    } else {
        Rational zp = rat(1);
        for (long p = 1; p <= k.order_p; ++p) {
            zp *= e.z;
            ps.push_back(p);
            zw.push_back(zp);
        }
    }

    std::vector<Rational> pmf;
    Rational norm = 0;
    if (stat == Statistic::BulkBoundary) {
        for (size_t i = 0; i < ps.size(); ++i)
            norm += zw[i] * coeff_at_n(log_w_inf_row(k, static_cast<int>(ps[i])), e.n);
        Rational cum = 0;
        for (int d = 0; d <= k.d_max && cum < norm; ++d) {
            Rational num = 0;
            for (size_t i = 0; i < ps.size(); ++i) {
                USeries hi = coeff_zp(k, CoeffFamily::LogWd, d, static_cast<int>(ps[i]));
                Rational gd = coeff_at_n(hi, e.n);
                if (d > 0) gd -= coeff_at_n(coeff_zp(k, CoeffFamily::LogWd, d - 1, static_cast<int>(ps[i])), e.n);
                num += zw[i] * gd;
            }
            pmf.push_back(num / norm);
            cum += num;
        }
        if (cum != norm) throw std::runtime_error("pmf_exact: d_max too small for full support");
    } else {
        for (size_t i = 0; i < ps.size(); ++i)
            norm += zw[i] * rat(2 * ps[i], 1) *
                    coeff_at_n(coeff_zp(k, CoeffFamily::Wd, 0, static_cast<int>(ps[i])), e.n);
        long dmax_support = 0;
        for (long p : ps) dmax_support = std::max(dmax_support, p);
        Rational cum = 0;
        for (long d = 0; d <= dmax_support; ++d) {
            Rational num = 0;
            for (size_t i = 0; i < ps.size(); ++i) {
                if (d > ps[i]) continue;  // boundary distance is at most p
                num += zw[i] *
                       coeff_at_n(coeff_zp(k, CoeffFamily::Td, static_cast<int>(d), static_cast<int>(ps[i])), e.n);
            }
            pmf.push_back(num / norm);
            cum += num;
        }
        if (cum != norm) throw std::runtime_error("pmf_exact: boundary pmf does not close");
    }
    return pmf;
}

Rational pmf_exact(const KernelSeries& k, const Ensemble& e, Statistic stat, int d) {
    std::vector<Rational> pmf = pmf_exact_all(k, e, stat);
    if (d < 0) throw std::invalid_argument("pmf_exact: d must be >= 0");
    if (d >= static_cast<int>(pmf.size())) return rat(0);
    return pmf[static_cast<size_t>(d)];
}

}  // namespace quadbound
