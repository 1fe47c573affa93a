#include "quadbound/biseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadbound {

BiSeries BiSeries::constant(int order_n, int order_p, const Rational& c0) {
    BiSeries s(order_n, order_p);
    s.coeff(0, 0) = c0;
    return s;
}

BiSeries BiSeries::var_g(int order_n, int order_p) {
    BiSeries s(order_n, order_p);
    if (order_n >= 1) s.coeff(1, 0) = 1;
    return s;
}

BiSeries BiSeries::var_z(int order_n, int order_p) {
    BiSeries s(order_n, order_p);
    if (order_p >= 1) s.coeff(0, 1) = 1;
    return s;
}

BiSeries BiSeries::from_g_series(const USeries& u, int order_p) {
    BiSeries s(u.order(), order_p);
    for (int n = 0; n <= u.order(); ++n) s.coeff(n, 0) = u.coeff(n);
    return s;
}

BiSeries BiSeries::from_z_rows(const std::vector<USeries>& rows, int order_n) {
    BiSeries s(order_n, static_cast<int>(rows.size()) - 1);
    for (int p = 0; p < static_cast<int>(rows.size()); ++p)
        for (int n = 0; n <= std::min(order_n, rows[static_cast<size_t>(p)].order()); ++n)
            s.coeff(n, p) = rows[static_cast<size_t>(p)].coeff(n);
    return s;
}

USeries BiSeries::z_row(int p) const {
    USeries u(order_n_);
    for (int n = 0; n <= order_n_; ++n) u.coeff(n) = coeff(n, p);
    return u;
}

bool BiSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

BiSeries BiSeries::truncated(int order_n, int order_p) const {
    BiSeries r(std::min(order_n, order_n_), std::min(order_p, order_p_));
    for (int n = 0; n <= r.order_n(); ++n)
        for (int p = 0; p <= r.order_p(); ++p) r.coeff(n, p) = coeff(n, p);
    return r;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order_n(), b.order_n()), std::min(a.order_p(), b.order_p()));
    for (int n = 0; n <= r.order_n(); ++n)
        for (int p = 0; p <= r.order_p(); ++p) r.coeff(n, p) = a.coeff(n, p) + b.coeff(n, p);
    return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order_n(), b.order_n()), std::min(a.order_p(), b.order_p()));
    for (int n = 0; n <= r.order_n(); ++n)
        for (int p = 0; p <= r.order_p(); ++p) r.coeff(n, p) = a.coeff(n, p) - b.coeff(n, p);
    return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order_n(), b.order_n()), std::min(a.order_p(), b.order_p()));
    const int N = r.order_n(), P = r.order_p();
    mpq_t t;
    mpq_init(t);
    for (int i = 0; i <= N; ++i) {
        for (int j = 0; j <= P; ++j) {
            const Rational& aij = a.coeff(i, j);
            if (aij == 0) continue;
            for (int k = 0; i + k <= N; ++k) {
                for (int l = 0; j + l <= P; ++l) {
                    const Rational& bkl = b.coeff(k, l);
                    if (bkl == 0) continue;
                    mpq_mul(t, aij.get_mpq_t(), bkl.get_mpq_t());
                    Rational& dst = r.coeff(i + k, j + l);
                    mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), t);
                }
            }
        }
    }
    mpq_clear(t);
    return r;
}

BiSeries operator*(const Rational& c, const BiSeries& a) {
    BiSeries r(a.order_n(), a.order_p());
    for (int n = 0; n <= r.order_n(); ++n)
        for (int p = 0; p <= r.order_p(); ++p) r.coeff(n, p) = c * a.coeff(n, p);
    return r;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
    if (a.order_n() != b.order_n() || a.order_p() != b.order_p()) return false;
    for (int n = 0; n <= a.order_n(); ++n)
        for (int p = 0; p <= a.order_p(); ++p)
            if (a.coeff(n, p) != b.coeff(n, p)) return false;
    return true;
}

BiSeries div_unit(const BiSeries& a, const BiSeries& b) {
    if (b.coeff(0, 0) == 0) throw std::domain_error("div_unit: denominator has zero constant term");
    BiSeries q(std::min(a.order_n(), b.order_n()), std::min(a.order_p(), b.order_p()));
    const int N = q.order_n(), P = q.order_p();
    mpq_t t;
    mpq_init(t);
    for (int n = 0; n <= N; ++n) {
        for (int p = 0; p <= P; ++p) {
            Rational acc = a.coeff(n, p);
            for (int k = 0; k <= n; ++k) {
                for (int l = 0; l <= p; ++l) {
                    if (k == n && l == p) continue;
                    const Rational& qk = q.coeff(k, l);
                    const Rational& bk = b.coeff(n - k, p - l);
                    if (qk == 0 || bk == 0) continue;
                    mpq_mul(t, qk.get_mpq_t(), bk.get_mpq_t());
                    mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), t);
                }
            }
            q.coeff(n, p) = acc / b.coeff(0, 0);
        }
    }
    mpq_clear(t);
    return q;
}

BiSeries log_unit(const BiSeries& a) {
    if (a.coeff(0, 0) != 1) throw std::domain_error("log_unit: constant term must be 1");
    const int N = a.order_n(), P = a.order_p();
    // dL/dg = (da/dg)/a row-integrated in n; the n = 0 row is a univariate log.
    BiSeries da(N, P);
    for (int n = 1; n <= N; ++n)
        for (int p = 0; p <= P; ++p) da.coeff(n - 1, p) = Rational(n) * a.coeff(n, p);
    BiSeries ratio = div_unit(da, a);
    BiSeries l(N, P);
    for (int n = 1; n <= N; ++n)
        for (int p = 0; p <= P; ++p) l.coeff(n, p) = ratio.coeff(n - 1, p) / Rational(n);
    USeries row0(P);
    for (int p = 0; p <= P; ++p) row0.coeff(p) = a.coeff(0, p);
    USeries lrow0 = log_unit(row0);
    for (int p = 0; p <= P; ++p) l.coeff(0, p) = lrow0.coeff(p);
    return l;
}

BiSeries exp_zero(const BiSeries& u) {
    if (u.coeff(0, 0) != 0) throw std::domain_error("exp_zero: constant term must be 0");
    const int N = u.order_n(), P = u.order_p();
    USeries row0(P);
    for (int p = 0; p <= P; ++p) row0.coeff(p) = u.coeff(0, p);
    USeries erow0 = exp_zero(row0);
    BiSeries e(N, P);
    for (int p = 0; p <= P; ++p) e.coeff(0, p) = erow0.coeff(p);
    // n E_n = sum_{k=1..n} k u_k E_{n-k}  (rows convolved in z)
    for (int n = 1; n <= N; ++n) {
        for (int p = 0; p <= P; ++p) {
            Rational acc = 0;
            for (int k = 1; k <= n; ++k)
                for (int l = 0; l <= p; ++l) acc += Rational(k) * u.coeff(k, l) * e.coeff(n - k, p - l);
            e.coeff(n, p) = acc / Rational(n);
        }
    }
    return e;
}

BiSeries mul_g(const BiSeries& a, const USeries& u) {
    BiSeries r(std::min(a.order_n(), u.order()), a.order_p());
    mpq_t t;
    mpq_init(t);
    for (int k = 0; k <= r.order_n(); ++k) {
        if (u.coeff(k) == 0) continue;
        for (int n = 0; n + k <= r.order_n(); ++n) {
            for (int p = 0; p <= r.order_p(); ++p) {
                const Rational& an = a.coeff(n, p);
                if (an == 0) continue;
                mpq_mul(t, u.coeff(k).get_mpq_t(), an.get_mpq_t());
                Rational& dst = r.coeff(n + k, p);
                mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), t);
            }
        }
    }
    mpq_clear(t);
    return r;
}

BiSeries d_dz(const BiSeries& a) {
    BiSeries r(a.order_n(), a.order_p());
    for (int n = 0; n <= a.order_n(); ++n)
        for (int p = 1; p <= a.order_p(); ++p) r.coeff(n, p - 1) = Rational(p) * a.coeff(n, p);
    return r;
}

BiSeries substitute_boundary_weight(const BiSeries& S, const BiSeries& Zsub) {
    for (int n = 0; n <= Zsub.order_n(); ++n)
        if (Zsub.coeff(n, 0) != 0)
            throw std::domain_error("substitute_boundary_weight: substitution must vanish at z = 0");
    BiSeries r(std::min(S.order_n(), Zsub.order_n()), Zsub.order_p());
    BiSeries zp = BiSeries::constant(r.order_n(), r.order_p(), 1);
    for (int p = 0; p <= S.order_p(); ++p) {
        if (p > 0) {
            if (p > r.order_p()) break;  // Zsub^p has z-valuation >= p
            zp *= Zsub;
        }
        for (int n = 0; n <= r.order_n(); ++n) {
            const Rational& s = S.coeff(n, p);
            if (s == 0) continue;
            for (int k = 0; n + k <= r.order_n(); ++k)
                for (int l = 0; l <= r.order_p(); ++l)
                    if (zp.coeff(k, l) != 0) r.coeff(n + k, l) += s * zp.coeff(k, l);
        }
    }
    return r;
}

BiSeries fixpoint_solve(const std::function<BiSeries(const BiSeries&)>& map, const BiSeries& seed) {
    BiSeries f = seed;
    const int limit = seed.order_n() + seed.order_p() + 2;
    for (int it = 0; it < limit; ++it) {
        BiSeries nf = map(f).truncated(seed.order_n(), seed.order_p());
        if (nf == f) return f;
        f = nf;
    }
    throw std::runtime_error("fixpoint_solve: no stabilization (map is not a formal contraction)");
}

}  // namespace quadbound
