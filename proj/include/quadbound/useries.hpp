#pragma once

#include <functional>
#include <vector>

#include "quadbound/rational.hpp"

namespace quadbound {

/// Truncated univariate formal power series with exact rational coefficients.
/// All arithmetic truncates to the minimum order of the operands.
class USeries {
  public:
    USeries() = default;
    explicit USeries(int order) : c_(static_cast<size_t>(order) + 1) {}
    USeries(int order, const Rational& c0) : USeries(order) { c_[0] = c0; }

    static USeries constant(int order, const Rational& c0) { return USeries(order, c0); }
    // the series "g" (single monomial of degree 1)
    static USeries variable(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    Rational& coeff(int i) { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    USeries truncated(int order) const;

    friend USeries operator+(const USeries& a, const USeries& b);
    friend USeries operator-(const USeries& a, const USeries& b);
    friend USeries operator*(const USeries& a, const USeries& b);
    friend USeries operator*(const Rational& c, const USeries& a);
    friend bool operator==(const USeries& a, const USeries& b);

    USeries& operator+=(const USeries& b) { return *this = *this + b; }
    USeries& operator-=(const USeries& b) { return *this = *this - b; }
    USeries& operator*=(const USeries& b) { return *this = *this * b; }

  private:
    std::vector<Rational> c_;
};

// a / b with b(0) != 0
USeries div_unit(const USeries& a, const USeries& b);
// log(a) with a(0) == 1
USeries log_unit(const USeries& a);
// exp(u) with u(0) == 0
USeries exp_zero(const USeries& u);
USeries pow_series(const USeries& a, int e);
// multiply by g^k (drops coefficients beyond the order)
USeries shift_up(const USeries& a, int k);

// Iterates F <- map(F) until exact stabilization; the map must increase the
// valuation of perturbations by at least one per step.
USeries fixpoint_solve(const std::function<USeries(const USeries&)>& map, const USeries& seed);

}  // namespace quadbound
