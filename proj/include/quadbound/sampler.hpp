#pragma once

#include <cstdint>
#include <vector>

#include "quadbound/boundary_code.hpp"
#include "quadbound/families.hpp"
#include "quadbound/rng.hpp"

namespace quadbound {

/// r[l][m] = number of well-labeled trees with m edges, root label l and all
/// labels >= 1. The column l = ell_max+1 stands for any larger root label
/// (the floor is inactive once l > m).
struct TreeCountTable {
    int ell_max = 0;
    int n_max = 0;
    std::vector<std::vector<Int>> r;

    const Int& count(int ell, int m) const;
};

TreeCountTable build_tree_table(int ell_max, int n_max);

/// Exact-uniform well-labeled tree with m edges and root label ell.
WellLabeledTree sample_tree(const TreeCountTable& t, int m, int ell, Rng& rng);

/// N[i][h][m] = completions of a decorated Dyck path from step i at height h
/// with m tree edges left, descent trees rooted at label h + base.
struct PathCountTable {
    int n = 0, p = 0, base = 0;
    std::vector<std::vector<std::vector<Int>>> N;

    const Int& total() const;
};

PathCountTable build_path_table(const TreeCountTable& trees, int n, int p, int base);

/// Exact-uniform decorated path (a code skeleton at the table's base, labels
/// >= 1, no minimum-label conditioning).
BoundaryCode sample_path_object(const PathCountTable& t, const TreeCountTable& trees, Rng& rng);

/// Marked object in the label-unconstrained ensemble at fixed (n, p):
/// uniform Dyck path, uniform forest of p trees with n edges total, and an
/// independent label increment in {-1,0,+1} per edge. Exactly uniform, O(n).
struct MarkedObject {
    std::vector<int> steps;        // Dyck path, length 2p
    std::vector<int> forest_word;  // n ups, n+p downs (cycle-lemma forest)
    std::vector<int> edge_delta;   // label increments, in walk order
};

MarkedObject sample_marked_object(int n, int p, Rng& rng);
std::vector<int> uniform_forest_word(int n, int p, Rng& rng);
std::vector<int> uniform_dyck_path(int p, Rng& rng);

// number of ascents from height zero (cyclically: returns to the minimum)
int marked_object_returns(const MarkedObject& o);
// origin-boundary distance of the decoded pointed map
int marked_object_distance(const MarkedObject& o);
// per-descent tree sizes (component sizes of the forest)
std::vector<int> marked_object_tree_sizes(const MarkedObject& o);
// explicit code at base n+1 (the label floor is inactive there)
BoundaryCode marked_object_to_code(const MarkedObject& o);

struct SampleConfig {
    Ensemble ensemble = Ensemble::fixed_np(0, 1);
    int base = -1;              // -1: unconstrained labels (base = n+1)
    bool min_label_one = false; // condition on global tree-label minimum 1
    uint64_t samples = 0;
    uint64_t seed = 1;
    int threads = 1;
};

/// One code from the configured class (exact uniform). Uses the closed-form
/// engine when the label floor is inactive, otherwise the big-integer DP.
BoundaryCode sample_code(const SampleConfig& cfg, Rng& rng);

struct Histogram {
    std::vector<uint64_t> counts;
    uint64_t samples = 0;

    uint64_t total() const;
    void add(int d);
    void merge(const Histogram& other);
};

/// Monte Carlo distance law. Bulk-boundary sampling reproduces the
/// inverse-symmetry-factor pointed measure (marked objects are reweighted by
/// the reciprocal of their count of closest-edge marks); boundary-boundary
/// sampling marks a uniform second contour position on base-0 objects.
Histogram distance_histogram(const SampleConfig& cfg, Statistic stat);

struct KsReport {
    double ks = 0;
    double chi2 = 0;
};

KsReport ks_compare(const Histogram& h, const std::vector<double>& reference_pmf);

}  // namespace quadbound
