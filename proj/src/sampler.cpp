#include "quadbound/sampler.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace quadbound {

// ---------------------------------------------------------------------------
// Rng

namespace {

inline uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

void Rng::reseed(uint64_t seed) {
    uint64_t x = seed;
    for (auto& s : s_) s = splitmix64(x);
}

Rng Rng::worker_stream(uint64_t seed, uint64_t worker) {
    return Rng(seed ^ ((worker + 1) * 0x9e3779b97f4a7c15ULL));
}

uint64_t Rng::u64() {
    uint64_t result = rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

uint64_t Rng::below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    // Lemire's multiply-shift with rejection on the low word
    unsigned __int128 m = static_cast<unsigned __int128>(u64()) * n;
    uint64_t lo = static_cast<uint64_t>(m);
    if (lo < n) {
        uint64_t floor = (0 - n) % n;
        while (lo < floor) {
            m = static_cast<unsigned __int128>(u64()) * n;
            lo = static_cast<uint64_t>(m);
        }
    }
    return static_cast<uint64_t>(m >> 64);
}

Int Rng::below(const Int& n) {
    if (n <= 0) throw std::invalid_argument("Rng::below: n must be positive");
    const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const size_t words = (bits + 63) / 64;
    std::vector<uint64_t> buf(words);
    for (;;) {
        for (auto& w : buf) w = u64();
        Int v;
        mpz_import(v.get_mpz_t(), words, 1, sizeof(uint64_t), 0, 0, buf.data());
        v >>= (64 * words - bits);
        if (v < n) return v;
    }
}

double Rng::real() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

// ---------------------------------------------------------------------------
// TreeCountTable

TreeCountTable build_tree_table(int ell_max, int n_max) {
    if (ell_max < 1 || n_max < 0) throw std::invalid_argument("build_tree_table: bad bounds");
    TreeCountTable t;
    t.ell_max = ell_max;
    t.n_max = n_max;
    t.r.assign(static_cast<size_t>(ell_max) + 2, std::vector<Int>(static_cast<size_t>(n_max) + 1, 0));
    for (int l = 1; l <= ell_max + 1; ++l) t.r[static_cast<size_t>(l)][0] = 1;
    for (int m = 1; m <= n_max; ++m) {
        for (int l = 1; l <= ell_max + 1; ++l) {
            Int acc = 0;
            for (int lp = l - 1; lp <= l + 1; ++lp) {
                if (lp < 1) continue;
                int lpc = std::min(lp, ell_max + 1);
                for (int j = 0; j <= m - 1; ++j)
                    acc += t.r[static_cast<size_t>(lpc)][static_cast<size_t>(j)] *
                           t.r[static_cast<size_t>(l)][static_cast<size_t>(m - 1 - j)];
            }
            t.r[static_cast<size_t>(l)][static_cast<size_t>(m)] = acc;
        }
    }
    return t;
}

const Int& TreeCountTable::count(int ell, int m) const {
    static const Int zero = 0;
    if (ell < 1 || m < 0 || m > n_max) return zero;
    int l = std::min(ell, ell_max + 1);
    return r[static_cast<size_t>(l)][static_cast<size_t>(m)];
}

WellLabeledTree sample_tree(const TreeCountTable& t, int m, int ell, Rng& rng) {
    if (ell < 1) throw std::invalid_argument("sample_tree: root label must be >= 1");
    if (t.count(ell, m) == 0) throw std::invalid_argument("sample_tree: empty class");
    WellLabeledTree root{ell, {}};
    if (m == 0) return root;
    Int pick = rng.below(t.count(ell, m));
    for (int lp = ell - 1; lp <= ell + 1; ++lp) {
        if (lp < 1) continue;
        for (int j = 0; j <= m - 1; ++j) {
            Int block = t.count(lp, j) * t.count(ell, m - 1 - j);
            if (pick < block) {
                WellLabeledTree first = sample_tree(t, j, lp, rng);
                WellLabeledTree rest = sample_tree(t, m - 1 - j, ell, rng);
                rest.children.insert(rest.children.begin(), first);
                return rest;
            }
            pick -= block;
        }
    }
    throw std::logic_error("sample_tree: count table inconsistent");
}

// ---------------------------------------------------------------------------
// PathCountTable

PathCountTable build_path_table(const TreeCountTable& trees, int n, int p, int base) {
    if (n < 0 || p < 1 || base < 0) throw std::invalid_argument("build_path_table: bad parameters");
    if (trees.n_max < n) throw std::invalid_argument("build_path_table: tree table too small");
    PathCountTable t;
    t.n = n;
    t.p = p;
    t.base = base;
    const int L = 2 * p;
    auto& N = t.N;
    N.assign(static_cast<size_t>(L) + 1, {});
    for (int i = 0; i <= L; ++i) {
        int hmax = std::min(i, L - i);
        N[static_cast<size_t>(i)].assign(static_cast<size_t>(hmax) + 1,
                                         std::vector<Int>(static_cast<size_t>(n) + 1, 0));
    }
    N[static_cast<size_t>(L)][0][0] = 1;
    for (int i = L - 1; i >= 0; --i) {
        int hmax = std::min(i, L - i);
        int hmax_next = std::min(i + 1, L - i - 1);
        for (int h = 0; h <= hmax; ++h) {
            for (int m = 0; m <= n; ++m) {
                Int acc = 0;
                if (h + 1 <= hmax_next)
                    acc += N[static_cast<size_t>(i + 1)][static_cast<size_t>(h + 1)][static_cast<size_t>(m)];
                if (h >= 1 && h - 1 <= hmax_next) {
                    for (int j = 0; j <= m; ++j)
                        acc += trees.count(h + base, j) *
                               N[static_cast<size_t>(i + 1)][static_cast<size_t>(h - 1)][static_cast<size_t>(m - j)];
                }
                N[static_cast<size_t>(i)][static_cast<size_t>(h)][static_cast<size_t>(m)] = acc;
            }
        }
    }
    return t;
}

const Int& PathCountTable::total() const { return N[0][0][static_cast<size_t>(n)]; }

BoundaryCode sample_path_object(const PathCountTable& t, const TreeCountTable& trees, Rng& rng) {
    if (t.total() == 0) throw std::invalid_argument("sample_path_object: empty class");
    BoundaryCode code;
    code.base = t.base;
    const int L = 2 * t.p;
    int h = 0, m = t.n;
    for (int i = 0; i < L; ++i) {
        int hmax_next = std::min(i + 1, L - i - 1);
        Int up = 0;
        if (h + 1 <= hmax_next)
            up = t.N[static_cast<size_t>(i + 1)][static_cast<size_t>(h + 1)][static_cast<size_t>(m)];
        Int down_total = 0;
        std::vector<Int> down;
        if (h >= 1 && h - 1 <= hmax_next) {
            down.resize(static_cast<size_t>(m) + 1);
            for (int j = 0; j <= m; ++j) {
                down[static_cast<size_t>(j)] =
                    trees.count(h + t.base, j) *
                    t.N[static_cast<size_t>(i + 1)][static_cast<size_t>(h - 1)][static_cast<size_t>(m - j)];
                down_total += down[static_cast<size_t>(j)];
            }
        }
        Int pick = rng.below(up + down_total);
        if (pick < up) {
            code.steps.push_back(1);
            ++h;
        } else {
            pick -= up;
            int j = 0;
            while (pick >= down[static_cast<size_t>(j)]) {
                pick -= down[static_cast<size_t>(j)];
                ++j;
            }
            code.trees.push_back(sample_tree(trees, j, h + t.base, rng));
            code.steps.push_back(-1);
            --h;
            m -= j;
        }
    }
    return code;
}

// ---------------------------------------------------------------------------
// closed-form engine at fixed (n, p)

std::vector<int> uniform_dyck_path(int p, Rng& rng) {
    // p ups and p+1 downs; the cycle lemma picks the unique rotation whose
    // first 2p letters form a Dyck path (cut at the first minimum)
    std::vector<int> s(static_cast<size_t>(2 * p + 1), -1);
    for (int i = 0; i < p; ++i) s[static_cast<size_t>(i)] = 1;
    for (int i = 2 * p; i >= 1; --i)
        std::swap(s[static_cast<size_t>(i)], s[rng.below(static_cast<uint64_t>(i + 1))]);
    int start = 0, y = 0, min_y = 0;
    for (int i = 0; i <= 2 * p; ++i) {
        y += s[static_cast<size_t>(i)];
        if (y < min_y) {
            min_y = y;
            start = i + 1;
        }
    }
    std::vector<int> d(static_cast<size_t>(2 * p));
    for (int i = 0; i < 2 * p; ++i) d[static_cast<size_t>(i)] = s[static_cast<size_t>((start + i) % (2 * p + 1))];
    return d;
}

std::vector<int> uniform_forest_word(int n, int p, Rng& rng) {
    // n ups and n+p downs; valid starts are the first attainments of the p
    // lowest prefix values (cycle lemma); pick one uniformly
    const int L = 2 * n + p;
    std::vector<int> s(static_cast<size_t>(L), -1);
    for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] = 1;
    for (int i = L - 1; i >= 1; --i)
        std::swap(s[static_cast<size_t>(i)], s[rng.below(static_cast<uint64_t>(i + 1))]);
    // valid rotations start at the first attainments of the p lowest prefix
    // values min..min+p-1 (all negative; min can undershoot -p)
    std::vector<int> first_at(static_cast<size_t>(n + p + 1), -1);  // value -k -> prefix index
    int y = 0, min_y = 0;
    for (int i = 0; i < L; ++i) {
        y += s[static_cast<size_t>(i)];
        if (y < 0 && first_at[static_cast<size_t>(-y)] < 0) first_at[static_cast<size_t>(-y)] = i + 1;
        min_y = std::min(min_y, y);
    }
    int choice = static_cast<int>(rng.below(static_cast<uint64_t>(p)));
    int start = first_at[static_cast<size_t>(-(min_y + choice))] % L;
    std::vector<int> out(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) out[static_cast<size_t>(i)] = s[static_cast<size_t>((start + i) % L)];
    return out;
}

MarkedObject sample_marked_object(int n, int p, Rng& rng) {
    MarkedObject o;
    o.steps = uniform_dyck_path(p, rng);
    o.forest_word = uniform_forest_word(n, p, rng);
    o.edge_delta.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) o.edge_delta[static_cast<size_t>(i)] = static_cast<int>(rng.below(3)) - 1;
    return o;
}

int marked_object_returns(const MarkedObject& o) {
    int y = 0, r = 0;
    for (int s : o.steps) {
        if (y == 0 && s == 1) ++r;
        y += s;
    }
    return r;
}

namespace {

std::vector<int> descent_heights(const std::vector<int>& steps) {
    std::vector<int> h;
    int y = 0;
    for (int s : steps) {
        if (s == -1) h.push_back(y);
        y += s;
    }
    return h;
}

// walks the forest word once, reporting (descent index, relative min label)
template <typename F>
void walk_forest(const MarkedObject& o, F&& per_tree) {
    std::vector<int> open;  // stack of label increments of open edges
    size_t ei = 0;
    int tree = 0;
    int label = 0, cur_min = 0;
    for (int s : o.forest_word) {
        if (s == 1) {
            int d = o.edge_delta[ei++];
            open.push_back(d);
            label += d;
            cur_min = std::min(cur_min, label);
        } else if (!open.empty()) {
            label -= open.back();
            open.pop_back();
        } else {
            per_tree(tree++, cur_min);
            cur_min = 0;
            label = 0;
        }
    }
}

}  // namespace

int marked_object_distance(const MarkedObject& o) {
    std::vector<int> h = descent_heights(o.steps);
    long t_rel = LONG_MAX;
    walk_forest(o, [&](int tree, int cur_min) {
        t_rel = std::min(t_rel, static_cast<long>(h[static_cast<size_t>(tree)]) + cur_min);
    });
    return static_cast<int>(std::max(0L, 1 - t_rel));
}

std::vector<int> marked_object_tree_sizes(const MarkedObject& o) {
    std::vector<int> sizes;
    int depth = 0, edges = 0;
    for (int s : o.forest_word) {
        if (s == 1) {
            ++depth;
            ++edges;
        } else if (depth > 0) {
            --depth;
        } else {
            sizes.push_back(edges);
            edges = 0;
        }
    }
    return sizes;
}

BoundaryCode marked_object_to_code(const MarkedObject& o) {
    const int n = static_cast<int>(o.edge_delta.size());
    const int base = n + 1;
    std::vector<int> h = descent_heights(o.steps);
    BoundaryCode code;
    code.base = base;
    code.steps = o.steps;
    code.trees.reserve(h.size());
    size_t ei = 0, wi = 0;
    for (size_t tree = 0; tree < h.size(); ++tree) {
        WellLabeledTree root{h[tree] + base, {}};
        std::vector<WellLabeledTree*> stack{&root};
        for (; wi < o.forest_word.size(); ++wi) {
            if (o.forest_word[wi] == 1) {
                WellLabeledTree child;
                child.label = stack.back()->label + o.edge_delta[ei++];
                stack.back()->children.push_back(std::move(child));
                stack.push_back(&stack.back()->children.back());
            } else if (stack.size() > 1) {
                stack.pop_back();
            } else {
                ++wi;  // consume the component separator
                break;
            }
        }
        code.trees.push_back(std::move(root));
    }
    return code;
}

// ---------------------------------------------------------------------------
// ensembles and histograms

namespace {

Int forest_count(long n, long p) {
    // p/(2n+p) * binom(2n+p, n)
    return to_integer(rat(Int(p) * binomial(2 * n + p, n), Int(2 * n + p)));
}

// p-marginal weights for the fixed-z ensembles, exact up to a common factor.
// kind 0: marked objects      ~ z^p Catalan(p) forest(n,p)   (times 3^n)
// kind 1: pointed measure     ~ z^p (2p-1)!/(p!)^2 forest(n,p)
// kind 2: doubly-rooted       ~ z^p 2p W0(n,p)
std::vector<Int> fixed_z_weights(long n, const Rational& z, int p_cap, int kind) {
    Int a = z.get_num(), b = z.get_den();
    std::vector<Int> w(static_cast<size_t>(p_cap) + 1, 0);
    for (long p = 1; p <= p_cap; ++p) {
        Rational body;
        switch (kind) {
            case 0:
                body = rat(factorial(2 * p), factorial(p) * factorial(p + 1)) * Rational(forest_count(n, p));
                break;
            case 1:
                body = rat(factorial(2 * p - 1), factorial(p) * factorial(p)) * Rational(forest_count(n, p));
                break;
            default:
                body = Rational(Int(2 * p) * closed_count({CountFamily::W0, n, p}));
                break;
        }
        // common scale: b^p_cap * (p_cap!)^2 keeps everything integral
        Rational scaled = body * Rational(pow_int(a, p) * pow_int(b, p_cap - p)) *
                          rat(factorial(p_cap) * factorial(p_cap), 1);
        w[static_cast<size_t>(p)] = to_integer(scaled);
    }
    return w;
}

long draw_weighted(const std::vector<Int>& w, Rng& rng) {
    Int total = 0;
    for (const Int& x : w) total += x;
    Int pick = rng.below(total);
    for (size_t p = 0; p < w.size(); ++p) {
        if (pick < w[p]) return static_cast<long>(p);
        pick -= w[p];
    }
    throw std::logic_error("draw_weighted: inconsistent weights");
}

int default_p_cap(const Ensemble& e) {
    // perimeter weights decay like (4z)^p; cut when the tail is below ~1e-19
    double fz = mpq_get_d(e.z.get_mpq_t());
    double q = std::min(0.999, 4 * fz);
    int cap = static_cast<int>(std::ceil(-64.0 / std::log2(q))) + 2;
    return std::min(512, std::max(4, cap));
}

}  // namespace

uint64_t Histogram::total() const {
    uint64_t t = 0;
    for (uint64_t c : counts) t += c;
    return t;
}

void Histogram::add(int d) {
    if (d >= static_cast<int>(counts.size())) counts.resize(static_cast<size_t>(d) + 1, 0);
    counts[static_cast<size_t>(d)]++;
}

void Histogram::merge(const Histogram& other) {
    if (other.counts.size() > counts.size()) counts.resize(other.counts.size(), 0);
    for (size_t i = 0; i < other.counts.size(); ++i) counts[i] += other.counts[i];
    samples += other.samples;
}

BoundaryCode sample_code(const SampleConfig& cfg, Rng& rng) {
    const long n = cfg.ensemble.n;
    long p = cfg.ensemble.p;
    if (cfg.min_label_one && cfg.base < 0)
        throw std::invalid_argument("sample_code: min-label-1 conditioning needs an explicit base");
    if (cfg.ensemble.type == Ensemble::Type::FixedZ) {
        int cap = default_p_cap(cfg.ensemble);
        if (cfg.base < 0) {
            p = draw_weighted(fixed_z_weights(n, cfg.ensemble.z, cap, 0), rng);
        } else {
            // class counts from the DP tables
            TreeCountTable trees = build_tree_table(cfg.base + cap + 1, static_cast<int>(n));
            std::vector<Int> w(static_cast<size_t>(cap) + 1, 0);
            std::vector<PathCountTable> tabs(static_cast<size_t>(cap) + 1);
            Int a = cfg.ensemble.z.get_num(), b = cfg.ensemble.z.get_den();
            for (long q = 1; q <= cap; ++q) {
                tabs[static_cast<size_t>(q)] = build_path_table(trees, static_cast<int>(n), static_cast<int>(q), cfg.base);
                w[static_cast<size_t>(q)] = tabs[static_cast<size_t>(q)].total() * pow_int(a, q) * pow_int(b, cap - q);
            }
            p = draw_weighted(w, rng);
            for (;;) {
                BoundaryCode c = sample_path_object(tabs[static_cast<size_t>(p)], trees, rng);
                if (!cfg.min_label_one) return c;
                int mn = INT_MAX;
                for (const auto& t : c.trees) mn = std::min(mn, t.min_label());
                if (mn == 1) return c;
            }
        }
    }
    if (cfg.base < 0) return marked_object_to_code(sample_marked_object(static_cast<int>(n), static_cast<int>(p), rng));
    TreeCountTable trees = build_tree_table(cfg.base + static_cast<int>(p) + 1, static_cast<int>(n));
    PathCountTable tab = build_path_table(trees, static_cast<int>(n), static_cast<int>(p), cfg.base);
    for (;;) {
        BoundaryCode c = sample_path_object(tab, trees, rng);
        if (!cfg.min_label_one) return c;
        int mn = INT_MAX;
        for (const auto& t : c.trees) mn = std::min(mn, t.min_label());
        if (mn == 1) return c;
    }
}

namespace {

Histogram bulk_boundary_worker(const SampleConfig& cfg, const std::vector<Int>* pweights, uint64_t count,
                               Rng rng) {
    Histogram h;
    const long n = cfg.ensemble.n;
    for (uint64_t s = 0; s < count; ++s) {
        long p = cfg.ensemble.type == Ensemble::Type::FixedNP ? cfg.ensemble.p : draw_weighted(*pweights, rng);
        // the marked-object measure overcounts a pointed map by its number of
        // closest-edge marks; accept with probability 1/k to land on the
        // inverse-symmetry-factor pointed measure
        std::vector<int> steps;
        for (;;) {
            steps = uniform_dyck_path(static_cast<int>(p), rng);
            int y = 0, k = 0;
            for (int st : steps) {
                if (y == 0 && st == 1) ++k;
                y += st;
            }
            if (k == 1 || rng.below(static_cast<uint64_t>(k)) == 0) break;
        }
        MarkedObject o;
        o.steps = std::move(steps);
        o.forest_word = uniform_forest_word(static_cast<int>(n), static_cast<int>(p), rng);
        o.edge_delta.resize(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) o.edge_delta[static_cast<size_t>(i)] = static_cast<int>(rng.below(3)) - 1;
        h.add(marked_object_distance(o));
    }
    h.samples = count;
    return h;
}

Histogram boundary_boundary_worker(const SampleConfig& cfg, const std::vector<Int>* pweights,
                                   const TreeCountTable* trees, const std::vector<PathCountTable>* tabs,
                                   uint64_t count, Rng rng) {
    Histogram h;
    for (uint64_t s = 0; s < count; ++s) {
        long p = cfg.ensemble.type == Ensemble::Type::FixedNP ? cfg.ensemble.p : draw_weighted(*pweights, rng);
        const PathCountTable& tab = (*tabs)[static_cast<size_t>(p)];
        BoundaryCode c = sample_path_object(tab, *trees, rng);
        auto hs = c.heights();
        int t = static_cast<int>(rng.below(static_cast<uint64_t>(2 * p)));
        h.add(hs[static_cast<size_t>(t)]);
    }
    h.samples = count;
    return h;
}

}  // namespace

Histogram distance_histogram(const SampleConfig& cfg, Statistic stat) {
    const long n = cfg.ensemble.n;
    std::vector<Int> pweights;
    long p_min = cfg.ensemble.p, p_max = cfg.ensemble.p;
    if (cfg.ensemble.type == Ensemble::Type::FixedZ) {
        int cap = default_p_cap(cfg.ensemble);
        pweights = fixed_z_weights(n, cfg.ensemble.z, cap, stat == Statistic::BulkBoundary ? 1 : 2);
        p_min = 1;
        p_max = cap;
    }
    TreeCountTable trees;
    std::vector<PathCountTable> tabs;
    if (stat == Statistic::BoundaryBoundary) {
        trees = build_tree_table(static_cast<int>(p_max) + 1, static_cast<int>(n));
        tabs.resize(static_cast<size_t>(p_max) + 1);
        for (long p = p_min; p <= p_max; ++p)
            tabs[static_cast<size_t>(p)] = build_path_table(trees, static_cast<int>(n), static_cast<int>(p), 0);
    }

    const int workers = std::max(1, cfg.threads);
    std::vector<Histogram> parts(static_cast<size_t>(workers));
    auto run = [&](int w) {
        uint64_t per = cfg.samples / static_cast<uint64_t>(workers);
        uint64_t count = w + 1 == workers ? cfg.samples - per * static_cast<uint64_t>(workers - 1) : per;
        Rng rng = Rng::worker_stream(cfg.seed, static_cast<uint64_t>(w));
        parts[static_cast<size_t>(w)] =
            stat == Statistic::BulkBoundary
                ? bulk_boundary_worker(cfg, pweights.empty() ? nullptr : &pweights, count, rng)
                : boundary_boundary_worker(cfg, pweights.empty() ? nullptr : &pweights, &trees, &tabs, count, rng);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> ts;
        for (int w = 0; w < workers; ++w) ts.emplace_back(run, w);
        for (auto& t : ts) t.join();
    }
    Histogram h;
    for (auto& part : parts) h.merge(part);
    return h;
}

KsReport ks_compare(const Histogram& h, const std::vector<double>& reference_pmf) {
    KsReport r;
    size_t n = std::max(h.counts.size(), reference_pmf.size());
    double ecum = 0, rcum = 0, ks = 0, chi2 = 0;
    double total = static_cast<double>(h.total());
    for (size_t d = 0; d < n; ++d) {
        double obs = d < h.counts.size() ? static_cast<double>(h.counts[d]) : 0.0;
        double ref = d < reference_pmf.size() ? reference_pmf[d] : 0.0;
        ecum += obs / total;
        rcum += ref;
        ks = std::max(ks, std::abs(ecum - rcum));
        double expect = ref * total;
        if (expect >= 5.0) chi2 += (obs - expect) * (obs - expect) / expect;
    }
    r.ks = ks;
    r.chi2 = chi2;
    return r;
}

}  // namespace quadbound
