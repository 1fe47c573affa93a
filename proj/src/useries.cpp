#include "quadbound/useries.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadbound {

USeries USeries::variable(int order) {
    USeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

bool USeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

USeries USeries::truncated(int order) const {
    USeries r(std::min(order, this->order()));
    for (int i = 0; i <= r.order(); ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
    return r;
}

USeries operator+(const USeries& a, const USeries& b) {
    USeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) r.coeff(i) = a.coeff(i) + b.coeff(i);
    return r;
}

USeries operator-(const USeries& a, const USeries& b) {
    USeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) r.coeff(i) = a.coeff(i) - b.coeff(i);
    return r;
}

USeries operator*(const USeries& a, const USeries& b) {
    USeries r(std::min(a.order(), b.order()));
    mpq_t t;
    mpq_init(t);
    for (int i = 0; i <= r.order(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= r.order(); ++j) {
            if (b.coeff(j) == 0) continue;
            mpq_mul(t, a.coeff(i).get_mpq_t(), b.coeff(j).get_mpq_t());
            mpq_add(r.coeff(i + j).get_mpq_t(), r.coeff(i + j).get_mpq_t(), t);
        }
    }
    mpq_clear(t);
    return r;
}

USeries operator*(const Rational& c, const USeries& a) {
    USeries r(a.order());
    for (int i = 0; i <= r.order(); ++i) r.coeff(i) = c * a.coeff(i);
    return r;
}

bool operator==(const USeries& a, const USeries& b) {
    if (a.order() != b.order()) return false;
    for (int i = 0; i <= a.order(); ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

USeries div_unit(const USeries& a, const USeries& b) {
    if (b.coeff(0) == 0) throw std::domain_error("div_unit: denominator has zero constant term");
    USeries q(std::min(a.order(), b.order()));
    mpq_t t;
    mpq_init(t);
    for (int i = 0; i <= q.order(); ++i) {
        Rational acc = a.coeff(i);
        for (int k = 0; k < i; ++k) {
            if (q.coeff(k) == 0 || b.coeff(i - k) == 0) continue;
            mpq_mul(t, q.coeff(k).get_mpq_t(), b.coeff(i - k).get_mpq_t());
            mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), t);
        }
        q.coeff(i) = acc / b.coeff(0);
    }
    mpq_clear(t);
    return q;
}

USeries log_unit(const USeries& a) {
    if (a.coeff(0) != 1) throw std::domain_error("log_unit: constant term must be 1");
    // L' = a'/a, L(0) = 0
    const int n = a.order();
    USeries da(n);
    for (int i = 1; i <= n; ++i) da.coeff(i - 1) = Rational(i) * a.coeff(i);
    USeries ratio = div_unit(da, a);
    USeries l(n);
    for (int i = 1; i <= n; ++i) l.coeff(i) = ratio.coeff(i - 1) / Rational(i);
    return l;
}

USeries exp_zero(const USeries& u) {
    if (u.coeff(0) != 0) throw std::domain_error("exp_zero: constant term must be 0");
    const int n = u.order();
    // E' = E u'  =>  (i+1) E_{i+1} = sum_k (k+1) u_{k+1} E_{i-k}
    USeries e(n, Rational(1));
    for (int i = 1; i <= n; ++i) {
        Rational acc = 0;
        for (int k = 1; k <= i; ++k) acc += Rational(k) * u.coeff(k) * e.coeff(i - k);
        e.coeff(i) = acc / Rational(i);
    }
    return e;
}

USeries pow_series(const USeries& a, int e) {
    USeries r = USeries::constant(a.order(), 1);
    for (int i = 0; i < e; ++i) r *= a;
    return r;
}

USeries shift_up(const USeries& a, int k) {
    USeries r(a.order());
    for (int i = k; i <= a.order(); ++i) r.coeff(i) = a.coeff(i - k);
    return r;
}

USeries fixpoint_solve(const std::function<USeries(const USeries&)>& map, const USeries& seed) {
    USeries f = seed;
    const int limit = seed.order() + 2;
    for (int it = 0; it < limit; ++it) {
        USeries nf = map(f).truncated(seed.order());
        if (nf == f) return f;
        f = nf;
    }
    throw std::runtime_error("fixpoint_solve: no stabilization (map is not a formal contraction)");
}

}  // namespace quadbound
