#pragma once

#include <vector>

#include "quadbound/biseries.hpp"
#include "quadbound/kernel.hpp"
#include "quadbound/rational.hpp"

namespace quadbound {

// Bivariate generating functions. The tilde families live in (g, Z) with Z
// conjugate to the half-perimeter of a self-avoiding boundary; OmegaD/GammaD
// live in (g, y) with sqrt(y) the weight per loop edge.
enum class Family { W0, Wd, Gd, Td, TdSS, TildeW0, TildeWd, TildeWdPrime, TildeGd, OmegaD, GammaD };

struct FamilySpec {
    Family family = Family::W0;
    int d = 0;
    int s = 0;        // TdSS only: counterclockwise contour separation
    int s_prime = 0;  // TdSS only: clockwise contour separation
};

BiSeries series_family(const KernelSeries& k, const FamilySpec& spec);

enum class CountFamily { W0, W, TildeW0 };

struct CountQuery {
    CountFamily family = CountFamily::W0;
    long n = 0;  // area
    long p = 1;  // half-perimeter
};

/// Closed-form count of rooted maps with area n and perimeter 2p.
/// TildeW0 queries outside 1 <= p <= n+1 return 0 by convention.
Int closed_count(const CountQuery& q);

enum class CoeffFamily { Wd, LogWd, Td, TildeWd, TildeWdPrime };

/// Fixed-length extraction: the g-series multiplying z^p (or Z^p).
USeries coeff_zp(const KernelSeries& k, CoeffFamily family, int d, int p);

// rows of the d -> infinity limits, used for normalizations
USeries w_inf_row(const KernelSeries& k, int p);
USeries log_w_inf_row(const KernelSeries& k, int p);

struct Ensemble {
    enum class Type { FixedNP, FixedZ };
    Type type = Type::FixedNP;
    long n = 0;
    long p = 1;           // FixedNP only
    Rational z = rat(0);  // FixedZ only, in (0, 1/4)

    static Ensemble fixed_np(long n, long p) { return {Type::FixedNP, n, p, rat(0)}; }
    static Ensemble fixed_z(long n, const Rational& z) { return {Type::FixedZ, n, 1, z}; }
};

enum class Statistic { BulkBoundary, BoundaryBoundary };

/// Exact distance probability in the given ensemble. In the fixed-z ensemble
/// the half-perimeter support is capped at the kernel's order_p; the cap is
/// part of the ensemble definition here (weights beyond it are dropped from
/// both numerator and normalization, so the pmf still sums to one).
Rational pmf_exact(const KernelSeries& k, const Ensemble& e, Statistic stat, int d);

/// Full pmf over d (index = distance). Sums to exactly one.
std::vector<Rational> pmf_exact_all(const KernelSeries& k, const Ensemble& e, Statistic stat);

}  // namespace quadbound
