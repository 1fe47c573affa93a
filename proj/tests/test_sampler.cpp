#include <doctest.h>

#include <cmath>
#include <map>

#include "quadbound/kernel.hpp"
#include "quadbound/sampler.hpp"

using namespace quadbound;

TEST_CASE("rng determinism and stream splitting") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.u64() == b.u64());
    Rng w0 = Rng::worker_stream(42, 0), w1 = Rng::worker_stream(42, 1);
    CHECK(w0.u64() != w1.u64());
    Rng c(7);
    for (int i = 0; i < 1000; ++i) {
        uint64_t v = c.below(10);
        CHECK(v < 10);
    }
    Int big = pow_int(10, 30);
    for (int i = 0; i < 50; ++i) CHECK(c.below(big) < big);
}

TEST_CASE("tree count table matches the constrained-tree series") {
    KernelSeries k = build_kernel(6, 2, 8);
    TreeCountTable t = build_tree_table(8, 6);
    CHECK(t.count(1, 1) == 2);
    for (int ell = 1; ell <= 6; ++ell) {
        CHECK(t.count(ell, 0) == 1);
        for (int m = 0; m <= 6; ++m)
            CHECK(Rational(t.count(ell, m)) == k.R_ell_at(ell).coeff(m));
    }
    // column stabilization: floor inactive once ell > m
    for (int m = 0; m <= 6; ++m) CHECK(Rational(t.count(m + 1, m)) == k.R.coeff(m));
}

TEST_CASE("path count table equals generating-function coefficients") {
    KernelSeries k = build_kernel(6, 4, 10);
    TreeCountTable trees = build_tree_table(12, 6);
    for (int n = 0; n <= 5; ++n)
        for (int p = 1; p <= 4; ++p)
            for (int base = 0; base <= 3; ++base) {
                PathCountTable tab = build_path_table(trees, n, p, base);
                CHECK(Rational(tab.total()) == coeff_zp(k, CoeffFamily::Wd, base, p).coeff(n));
            }
}

TEST_CASE("sample_tree is uniform") {
    TreeCountTable t = build_tree_table(8, 4);
    Rng rng(1234);
    SUBCASE("empty tree") {
        WellLabeledTree tr = sample_tree(t, 0, 3, rng);
        CHECK(tr == WellLabeledTree{3, {}});
    }
    SUBCASE("two one-edge trees at the floor") {
        int c1 = 0, c2 = 0;
        const int N = 100000;
        for (int i = 0; i < N; ++i) {
            WellLabeledTree tr = sample_tree(t, 1, 1, rng);
            REQUIRE(validate(tr).empty());
            (tr.children[0].label == 1 ? c1 : c2)++;
        }
        // binomial 3-sigma band around N/2
        double sd = std::sqrt(N * 0.25);
        CHECK(std::abs(c1 - N / 2.0) < 3 * sd);
        CHECK(std::abs(c2 - N / 2.0) < 3 * sd);
    }
    SUBCASE("chi-square over all trees with three edges") {
        std::map<std::string, long> freq;
        std::vector<WellLabeledTree> all;
        enumerate_trees(3, 1, 1, [&](const WellLabeledTree& tr) { all.push_back(tr); });
        REQUIRE(Rational(static_cast<long>(all.size())) == Rational(t.count(1, 3)));
        auto key = [](const WellLabeledTree& tr) {
            std::function<std::string(const WellLabeledTree&)> rec = [&](const WellLabeledTree& x) {
                std::string s = "(" + std::to_string(x.label);
                for (const auto& c : x.children) s += rec(c);
                return s + ")";
            };
            return rec(tr);
        };
        const long N = 200000;
        for (long i = 0; i < N; ++i) freq[key(sample_tree(t, 3, 1, rng))]++;
        CHECK(freq.size() == all.size());
        double expect = static_cast<double>(N) / static_cast<double>(all.size());
        double chi2 = 0;
        for (auto& [s, c] : freq) chi2 += (c - expect) * (c - expect) / expect;
        double dof = static_cast<double>(all.size()) - 1;
        CHECK(chi2 < dof + 6 * std::sqrt(2 * dof) + 10);
    }
}

TEST_CASE("sample_code at (1,1): three equiprobable marked objects") {
    SampleConfig cfg;
    cfg.ensemble = Ensemble::fixed_np(1, 1);
    cfg.base = 2;  // floor inactive: the full marked class of 3 objects
    Rng rng(99);
    std::map<std::string, long> freq;
    const long N = 90000;
    for (long i = 0; i < N; ++i) freq[code_to_json(sample_code(cfg, rng)).dump()]++;
    CHECK(freq.size() == 3);
    for (auto& [s, c] : freq) CHECK(std::abs(c - N / 3.0) < 5 * std::sqrt(N * (1.0 / 3) * (2.0 / 3)));
}

TEST_CASE("closed-form engine matches the DP engine in distribution") {
    // both engines target the uniform law on label-unconstrained objects
    const int n = 2, p = 2, N = 120000;
    TreeCountTable trees = build_tree_table(n + p + 3, n);
    PathCountTable tab = build_path_table(trees, n, p, n + 1);
    Rng r1(5), r2(6);
    std::map<std::string, long> f1, f2;
    for (int i = 0; i < N; ++i) {
        f1[code_to_json(sample_path_object(tab, trees, r1)).dump()]++;
        f2[code_to_json(marked_object_to_code(sample_marked_object(n, p, r2))).dump()]++;
    }
    long classes = 0;
    enumerate_wd_objects(n, p, n + 1, [&](const BoundaryCode&) { ++classes; });
    CHECK(Rational(classes) == Rational(tab.total()));
    CHECK(static_cast<long>(f1.size()) == classes);
    CHECK(static_cast<long>(f2.size()) == classes);
    double expect = static_cast<double>(N) / static_cast<double>(classes);
    for (auto* f : {&f1, &f2}) {
        double chi2 = 0;
        for (auto& [s, c] : *f) chi2 += (c - expect) * (c - expect) / expect;
        double dof = classes - 1;
        CHECK(chi2 < dof + 6 * std::sqrt(2 * dof) + 10);
    }
}

TEST_CASE("marked-object distance readout agrees with the shift rule") {
    // spot checks at (1,1): delta +1/0 give distance 0, delta -1 gives 1
    Rng rng(3);
    int seen[2] = {0, 0};
    for (int i = 0; i < 3000; ++i) {
        MarkedObject o = sample_marked_object(1, 1, rng);
        int d = marked_object_distance(o);
        REQUIRE(d >= 0);
        REQUIRE(d <= 1);
        seen[d]++;
        CHECK(d == (o.edge_delta[0] == -1 ? 1 : 0));
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
}

TEST_CASE("bulk-boundary histogram matches the exact pmf") {
    KernelSeries k = build_kernel(6, 8);
    SampleConfig cfg;
    cfg.ensemble = Ensemble::fixed_np(4, 2);
    cfg.samples = 200000;
    cfg.seed = 2024;
    cfg.threads = 2;
    Histogram h = distance_histogram(cfg, Statistic::BulkBoundary);
    CHECK(h.total() == cfg.samples);
    auto pmf = pmf_exact_all(k, cfg.ensemble, Statistic::BulkBoundary);
    std::vector<double> ref;
    for (auto& q : pmf) ref.push_back(mpq_get_d(q.get_mpq_t()));
    KsReport rep = ks_compare(h, ref);
    CHECK(rep.ks < 4.0 / std::sqrt(static_cast<double>(cfg.samples)));
}

TEST_CASE("boundary-boundary histogram matches the exact pmf") {
    KernelSeries k = build_kernel(6, 8);
    SampleConfig cfg;
    cfg.ensemble = Ensemble::fixed_np(4, 2);
    cfg.samples = 200000;
    cfg.seed = 77;
    Histogram h = distance_histogram(cfg, Statistic::BoundaryBoundary);
    auto pmf = pmf_exact_all(k, cfg.ensemble, Statistic::BoundaryBoundary);
    std::vector<double> ref;
    for (auto& q : pmf) ref.push_back(mpq_get_d(q.get_mpq_t()));
    KsReport rep = ks_compare(h, ref);
    CHECK(rep.ks < 4.0 / std::sqrt(static_cast<double>(cfg.samples)));
    // distance never exceeds the half-perimeter
    CHECK(h.counts.size() <= 3);
}

TEST_CASE("fixed-z ensembles") {
    SUBCASE("perimeter marginal of sampled codes") {
        SampleConfig cfg;
        cfg.ensemble = Ensemble::fixed_z(2, rat(1, 10));
        Rng rng(11);
        std::map<int, long> pfreq;
        const long N = 60000;
        for (long i = 0; i < N; ++i) pfreq[sample_code(cfg, rng).half_perimeter()]++;
        // exact weights ~ z^p * (marked count at (2,p))
        std::vector<double> w;
        double tot = 0;
        for (int p = 1; p <= 12; ++p) {
            Int count = closed_count({CountFamily::W, 2, p});
            double v = std::pow(0.1, p) * mpz_get_d(count.get_mpz_t());
            w.push_back(v);
            tot += v;
        }
        for (int p = 1; p <= 6; ++p) {
            double expect = N * w[static_cast<size_t>(p - 1)] / tot;
            if (expect < 25) continue;
            CHECK(std::abs(pfreq[p] - expect) < 6 * std::sqrt(expect) + 6);
        }
    }
    SUBCASE("bulk histogram at fixed z agrees with the exact law") {
        KernelSeries k = build_kernel(3, 28);
        SampleConfig cfg;
        cfg.ensemble = Ensemble::fixed_z(3, rat(1, 20));
        cfg.samples = 150000;
        cfg.seed = 5150;
        Histogram h = distance_histogram(cfg, Statistic::BulkBoundary);
        auto pmf = pmf_exact_all(k, cfg.ensemble, Statistic::BulkBoundary);
        std::vector<double> ref;
        for (auto& q : pmf) ref.push_back(mpq_get_d(q.get_mpq_t()));
        KsReport rep = ks_compare(h, ref);
        CHECK(rep.ks < 4.0 / std::sqrt(static_cast<double>(cfg.samples)));
    }
}

TEST_CASE("ks_compare sanity") {
    Histogram h;
    h.counts = {10, 30, 60};
    h.samples = 100;
    KsReport self = ks_compare(h, {0.1, 0.3, 0.6});
    CHECK(self.ks == doctest::Approx(0.0));
    Histogram point;
    point.counts = {100};
    KsReport far = ks_compare(point, {0.0, 0.0, 0.0, 1.0});
    CHECK(far.ks == doctest::Approx(1.0));
}

TEST_CASE("sampled codes validate and respect the ensemble") {
    SampleConfig cfg;
    cfg.ensemble = Ensemble::fixed_np(3, 2);
    cfg.base = 1;
    cfg.min_label_one = true;
    Rng rng(8);
    for (int i = 0; i < 500; ++i) {
        BoundaryCode c = sample_code(cfg, rng);
        CHECK(c.area() == 3);
        CHECK(c.half_perimeter() == 2);
        CHECK(c.base == 1);
        CHECK(validate(c).empty());  // canonical: min tree label is one
    }
}
