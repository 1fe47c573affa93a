#include "quadbound/well_labeled_tree.hpp"

#include <cstdlib>

namespace quadbound {

int WellLabeledTree::edge_count() const {
    int n = 0;
    for (const auto& c : children) n += 1 + c.edge_count();
    return n;
}

int WellLabeledTree::min_label() const {
    int m = label;
    for (const auto& c : children) m = std::min(m, c.min_label());
    return m;
}

namespace {

void validate_rec(const WellLabeledTree& t, int floor, std::vector<std::string>& out) {
    if (t.label < floor)
        out.push_back("label " + std::to_string(t.label) + " below floor " + std::to_string(floor));
    for (const auto& c : t.children) {
        if (std::abs(c.label - t.label) > 1)
            out.push_back("adjacent labels " + std::to_string(t.label) + "," + std::to_string(c.label) +
                          " differ by more than 1");
        validate_rec(c, floor, out);
    }
}

// Decomposition at the root: first child subtree (j edges inside, one root
// edge) followed by the remaining tree with the same root.
std::vector<WellLabeledTree> enum_all(int m, int root, int floor) {
    std::vector<WellLabeledTree> out;
    if (m == 0) {
        out.push_back({root, {}});
        return out;
    }
    for (int j = 0; j < m; ++j) {
        for (int lp = root - 1; lp <= root + 1; ++lp) {
            if (lp < floor) continue;
            auto firsts = enum_all(j, lp, floor);
            auto rests = enum_all(m - 1 - j, root, floor);
            for (const auto& f : firsts) {
                for (const auto& r : rests) {
                    WellLabeledTree t = r;
                    t.children.insert(t.children.begin(), f);
                    out.push_back(std::move(t));
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> validate(const WellLabeledTree& t, int floor) {
    std::vector<std::string> out;
    validate_rec(t, floor, out);
    return out;
}

void enumerate_trees(int m, int root, int floor, const std::function<void(const WellLabeledTree&)>& sink) {
    if (root < floor) return;
    for (const auto& t : enum_all(m, root, floor)) sink(t);
}

long count_trees(int m, int root, int floor) {
    long n = 0;
    enumerate_trees(m, root, floor, [&](const WellLabeledTree&) { ++n; });
    return n;
}

}  // namespace quadbound
