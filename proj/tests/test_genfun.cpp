#include <doctest.h>

#include "quadbound/families.hpp"
#include "quadbound/identities.hpp"
#include "quadbound/kernel.hpp"

using namespace quadbound;

namespace {
const KernelSeries& kernel() {
    static KernelSeries k = build_kernel(10, 7);
    return k;
}
}  // namespace

TEST_CASE("kernel series") {
    const KernelSeries& k = kernel();
    CHECK(k.R.coeff(0) == 1);
    CHECK(k.R.coeff(1) == 3);
    CHECK(k.R.coeff(2) == 18);
    CHECK(k.R.coeff(3) == 135);
    // Catalan row at area order zero
    CHECK(k.W.coeff(0, 0) == 1);
    CHECK(k.W.coeff(0, 1) == 1);
    CHECK(k.W.coeff(0, 2) == 2);
    CHECK(k.W.coeff(0, 3) == 5);
    // f_1 = gR^2 = g + 6g^2 + ...
    CHECK(k.f_at(1).coeff(1) == 1);
    CHECK(k.f_at(1).coeff(2) == 6);
    CHECK(k.f_at(0).is_zero());
    // lambda = x(w-x)/(1-xw) solves the three-term substitution; spot check
    // its defining equation rearranged: lambda (1 - xw) = x(w - x)
    BiSeries xb = BiSeries::from_g_series(k.x, k.order_p);
    CHECK(k.lambda * (BiSeries::constant(k.order_n, k.order_p, 1) - mul_g(k.w, k.x)) == mul_g(k.w - xb, k.x));
}

TEST_CASE("W_d at z = 0 and monotonicity in d") {
    const KernelSeries& k = kernel();
    BiSeries prev(10, 7);
    for (int d = 0; d <= 4; ++d) {
        BiSeries wd = series_family(k, {Family::Wd, d});
        for (int n = 0; n <= 10; ++n) CHECK(wd.coeff(n, 0) == (n == 0 ? 1 : 0));
        if (d > 0)
            for (int n = 0; n <= 10; ++n)
                for (int p = 0; p <= 7; ++p) CHECK(wd.coeff(n, p) >= prev.coeff(n, p));
        prev = wd;
    }
    // W_d <= W coefficientwise
    for (int n = 0; n <= 10; ++n)
        for (int p = 0; p <= 7; ++p) CHECK(prev.coeff(n, p) <= k.W.coeff(n, p));
}

TEST_CASE("W_0 and closed counts") {
    const KernelSeries& k = kernel();
    BiSeries w0 = series_family(k, {Family::W0});
    CHECK(w0.coeff(1, 1) == 2);
    for (long n = 0; n <= 10; ++n)
        for (long p = 1; p <= 7; ++p) {
            CHECK(w0.coeff(static_cast<int>(n), static_cast<int>(p)) ==
                  Rational(closed_count({CountFamily::W0, n, p})));
            CHECK(k.W.coeff(static_cast<int>(n), static_cast<int>(p)) ==
                  Rational(closed_count({CountFamily::W, n, p})));
        }
    CHECK(closed_count({CountFamily::W0, 1, 1}) == 2);
    CHECK(closed_count({CountFamily::W, 1, 1}) == 3);
    CHECK(closed_count({CountFamily::TildeW0, 2, 2}) == 10);
    // n = 0 reduces to Catalan numbers
    for (long p = 1; p <= 8; ++p)
        CHECK(closed_count({CountFamily::W0, 0, p}) == binomial(2 * p, p) / Int(p + 1));
    CHECK(closed_count({CountFamily::TildeW0, 0, 2}) == 0);  // p > n+1
    CHECK_THROWS(closed_count({CountFamily::W0, -1, 1}));
    CHECK_THROWS(closed_count({CountFamily::W0, 1, 0}));
}

TEST_CASE("T_0 = W_0^2 - W_0 and T_d integrality") {
    const KernelSeries& k = kernel();
    BiSeries w0 = series_family(k, {Family::W0});
    CHECK(series_family(k, {Family::Td, 0}) == w0 * w0 - w0);
    for (int d = 1; d <= 3; ++d) {
        BiSeries td = series_family(k, {Family::Td, d});
        for (int n = 0; n <= 10; ++n)
            for (int p = 0; p <= 7; ++p) {
                CHECK(is_integer(td.coeff(n, p)));
                CHECK(td.coeff(n, p) >= 0);
            }
    }
}

TEST_CASE("tilde families and conventions") {
    const KernelSeries& k = kernel();
    BiSeries wt0 = series_family(k, {Family::TildeW0});
    for (long n = 0; n <= 10; ++n)
        for (long p = 1; p <= 7; ++p)
            CHECK(wt0.coeff(static_cast<int>(n), static_cast<int>(p)) ==
                  Rational(closed_count({CountFamily::TildeW0, n, p})));
    // convention: Wtilde_d restricted to area order zero is 1 + Z
    for (int d = 0; d <= 3; ++d) {
        BiSeries wtd = series_family(k, {Family::TildeWd, d});
        CHECK(wtd.coeff(0, 0) == 1);
        CHECK(wtd.coeff(0, 1) == 1);
        for (int p = 2; p <= 7; ++p) CHECK(wtd.coeff(0, p) == 0);
        for (int n = 0; n <= 10; ++n)
            for (int p = 0; p <= 7; ++p) {
                CHECK(is_integer(wtd.coeff(n, p)));
                CHECK(wtd.coeff(n, p) >= 0);
            }
    }
    // Gd-type families have nonnegative rational coefficients
    for (int d = 0; d <= 3; ++d) {
        BiSeries gd = series_family(k, {Family::TildeGd, d});
        for (int n = 0; n <= 10; ++n)
            for (int p = 0; p <= 7; ++p) CHECK(gd.coeff(n, p) >= 0);
    }
}

TEST_CASE("coeff_zp agrees with bivariate extraction") {
    const KernelSeries& k = kernel();
    for (int d = 0; d <= 3; ++d) {
        BiSeries wd = series_family(k, {Family::Wd, d});
        BiSeries lwd = log_unit(wd);
        BiSeries td = series_family(k, {Family::Td, d});
        BiSeries wtd = series_family(k, {Family::TildeWd, d});
        BiSeries wtp = series_family(k, {Family::TildeWdPrime, d});
        for (int p = 1; p <= 7; ++p) {
            CHECK(coeff_zp(k, CoeffFamily::Wd, d, p) == wd.z_row(p));
            CHECK(coeff_zp(k, CoeffFamily::LogWd, d, p) == lwd.z_row(p));
            CHECK(coeff_zp(k, CoeffFamily::Td, d, p) == td.z_row(p));
            CHECK(coeff_zp(k, CoeffFamily::TildeWd, d, p) == wtd.z_row(p));
            CHECK(coeff_zp(k, CoeffFamily::TildeWdPrime, d, p) == wtp.z_row(p));
        }
    }
    // at half-perimeter one the object is a single constrained tree whose
    // root sits one above the base: W_d|_{z^1} = R_{d+1}
    for (int d = 0; d <= 4; ++d) CHECK(coeff_zp(k, CoeffFamily::Wd, d, 1) == k.R_ell_at(d + 1));
    // W_0 row at area order zero: Catalan numbers
    for (int p = 1; p <= 7; ++p)
        CHECK(coeff_zp(k, CoeffFamily::Wd, 0, p).coeff(0) == rat(binomial(2 * p, p), 1) / rat(p + 1, 1));
    // T_d vanishes for p < d
    for (int d = 2; d <= 4; ++d)
        for (int p = 1; p < d; ++p) CHECK(coeff_zp(k, CoeffFamily::Td, d, p).is_zero());
}

TEST_CASE("refined boundary correlator: parity and contour sum") {
    const KernelSeries& k = kernel();
    // vanishes when the parities of s, s' disagree with d
    CHECK(series_family(k, {Family::TdSS, 1, 2, 2}).is_zero());
    CHECK_THROWS(series_family(k, {Family::TdSS, 1, 2, 1}));  // s+s' odd: malformed
    for (int d = 1; d <= 3; ++d) {
        BiSeries td = series_family(k, {Family::Td, d});
        for (int p = 1; p <= 5; ++p) {
            BiSeries sum(k.order_n, k.order_p);
            for (int s = 0; s <= 2 * p; ++s) {
                int sp = 2 * p - s;
                if ((s - d) % 2 != 0) continue;
                sum += series_family(k, {Family::TdSS, d, s, sp});
            }
            CHECK(sum.z_row(0) == td.z_row(p));
        }
    }
}

TEST_CASE("loop families") {
    const KernelSeries& k = kernel();
    BiSeries g0 = series_family(k, {Family::GammaD, 0});
    // Gamma_0 is the diagonal square of the self-avoiding rows
    for (int p = 1; p <= 7; ++p) {
        USeries row = coeff_zp(k, CoeffFamily::TildeWd, 0, p);
        CHECK(g0.z_row(p) == row * row);
    }
    // telescoping and nonnegativity
    BiSeries acc = g0;
    for (int d = 1; d <= 3; ++d) {
        BiSeries gd = series_family(k, {Family::GammaD, d});
        for (int n = 0; n <= 10; ++n)
            for (int p = 0; p <= 7; ++p) CHECK(gd.coeff(n, p) >= 0);
        acc += gd;
        CHECK(acc == series_family(k, {Family::OmegaD, d}));
    }
}

TEST_CASE("exact pmfs") {
    const KernelSeries& k = kernel();
    SUBCASE("fixed (n,p) bulk-boundary sums to one") {
        for (long n : {1L, 4L, 7L}) {
            for (long p : {1L, 2L, 3L}) {
                auto pmf = pmf_exact_all(k, Ensemble::fixed_np(n, p), Statistic::BulkBoundary);
                Rational tot = 0;
                for (auto& q : pmf) tot += q;
                CHECK(tot == 1);
            }
        }
    }
    SUBCASE("known values at (1,1)") {
        CHECK(pmf_exact(k, Ensemble::fixed_np(1, 1), Statistic::BulkBoundary, 0) == rat(2, 3));
        CHECK(pmf_exact(k, Ensemble::fixed_np(1, 1), Statistic::BulkBoundary, 1) == rat(1, 3));
        CHECK(pmf_exact(k, Ensemble::fixed_np(1, 1), Statistic::BulkBoundary, 2) == 0);
    }
    SUBCASE("boundary-boundary support and normalization") {
        for (long n : {0L, 2L, 4L}) {
            for (long p : {1L, 2L, 3L}) {
                auto pmf = pmf_exact_all(k, Ensemble::fixed_np(n, p), Statistic::BoundaryBoundary);
                Rational tot = 0;
                for (auto& q : pmf) tot += q;
                CHECK(tot == 1);
                CHECK(static_cast<long>(pmf.size()) <= p + 1);  // distance at most p
            }
        }
    }
    SUBCASE("fixed z sums to one exactly") {
        auto pmf = pmf_exact_all(k, Ensemble::fixed_z(3, rat(1, 10)), Statistic::BulkBoundary);
        Rational tot = 0;
        for (auto& q : pmf) tot += q;
        CHECK(tot == 1);
        auto pmf2 = pmf_exact_all(k, Ensemble::fixed_z(3, rat(1, 10)), Statistic::BoundaryBoundary);
        tot = 0;
        for (auto& q : pmf2) tot += q;
        CHECK(tot == 1);
        CHECK_THROWS(pmf_exact_all(k, Ensemble::fixed_z(3, rat(1, 4)), Statistic::BulkBoundary));
    }
}

TEST_CASE("identity suite passes") {
    IdentityReport rep = verify_identities(8, 5, 3);
    for (const auto& item : rep.items) {
        INFO(item.name);
        CHECK(item.pass);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("substitution identity from the spec example") {
    const KernelSeries& k = kernel();
    BiSeries w0 = series_family(k, {Family::W0});
    BiSeries wt0 = series_family(k, {Family::TildeW0});
    CHECK(substitute_boundary_weight(wt0, BiSeries::var_z(10, 7) * (w0 * w0)) == w0);
}
