#pragma once

#include <functional>
#include <vector>

#include "quadbound/rational.hpp"
#include "quadbound/useries.hpp"

namespace quadbound {

/// Truncated bivariate formal power series c[n][p] over exact rationals.
/// The first variable is the area weight, the second the (half-)perimeter
/// weight. Arithmetic truncates to the minimum orders of the operands; all
/// entries up to the orders are stored, absent terms are exact zeros.
class BiSeries {
  public:
    BiSeries() = default;
    BiSeries(int order_n, int order_p)
        : order_n_(order_n),
          order_p_(order_p),
          c_(static_cast<size_t>(order_n + 1) * static_cast<size_t>(order_p + 1)) {}

    static BiSeries constant(int order_n, int order_p, const Rational& c0);
    static BiSeries var_g(int order_n, int order_p);  // the area variable
    static BiSeries var_z(int order_n, int order_p);  // the boundary variable
    // embed a series in the area variable only
    static BiSeries from_g_series(const USeries& u, int order_p);
    // assemble from rows: rows[p] is the g-series multiplying z^p
    static BiSeries from_z_rows(const std::vector<USeries>& rows, int order_n);

    int order_n() const { return order_n_; }
    int order_p() const { return order_p_; }
    const Rational& coeff(int n, int p) const { return c_[idx(n, p)]; }
    Rational& coeff(int n, int p) { return c_[idx(n, p)]; }

    USeries z_row(int p) const;  // g-series multiplying z^p
    bool is_zero() const;
    BiSeries truncated(int order_n, int order_p) const;

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const Rational& c, const BiSeries& a);
    friend bool operator==(const BiSeries& a, const BiSeries& b);

    BiSeries& operator+=(const BiSeries& b) { return *this = *this + b; }
    BiSeries& operator-=(const BiSeries& b) { return *this = *this - b; }
    BiSeries& operator*=(const BiSeries& b) { return *this = *this * b; }

  private:
    size_t idx(int n, int p) const {
        return static_cast<size_t>(n) * static_cast<size_t>(order_p_ + 1) + static_cast<size_t>(p);
    }

    int order_n_ = 0;
    int order_p_ = 0;
    std::vector<Rational> c_;
};

// a / b with b(0,0) != 0
BiSeries div_unit(const BiSeries& a, const BiSeries& b);
// log(a) with a(0,0) == 1
BiSeries log_unit(const BiSeries& a);
// exp(u) with u(0,0) == 0
BiSeries exp_zero(const BiSeries& u);
// multiply by a series in the area variable only (cheap row convolution)
BiSeries mul_g(const BiSeries& a, const USeries& u);
// partial derivative in the boundary variable
BiSeries d_dz(const BiSeries& a);

// Replaces each power Z^p of the boundary variable of S by Zsub^p.
// Zsub must vanish at z = 0 (every monomial carries a positive z power).
BiSeries substitute_boundary_weight(const BiSeries& S, const BiSeries& Zsub);

BiSeries fixpoint_solve(const std::function<BiSeries(const BiSeries&)>& map, const BiSeries& seed);

}  // namespace quadbound
