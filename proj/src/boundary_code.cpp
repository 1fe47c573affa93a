#include "quadbound/boundary_code.hpp"

#include <stdexcept>

namespace quadbound {

int BoundaryCode::area() const {
    int n = 0;
    for (const auto& t : trees) n += t.edge_count();
    return n;
}

std::vector<int> BoundaryCode::heights() const {
    std::vector<int> h(steps.size());
    int y = 0;
    for (size_t i = 0; i < steps.size(); ++i) {
        h[i] = y;
        y += steps[i];
    }
    return h;
}

std::vector<std::string> validate(const BoundaryCode& c) {
    std::vector<std::string> out;
    if (c.base < 0) out.push_back("base must be >= 0");
    if (c.steps.size() % 2 != 0) out.push_back("path length must be even");
    int y = 0;
    size_t descents = 0;
    for (size_t i = 0; i < c.steps.size(); ++i) {
        if (c.steps[i] != 1 && c.steps[i] != -1) out.push_back("steps must be +-1");
        if (c.steps[i] == -1) {
            ++descents;
            if (y < 1) out.push_back("path dips below zero");
        }
        y += c.steps[i];
    }
    if (y != 0) out.push_back("path must return to zero");
    if (descents != c.trees.size()) out.push_back("one tree per descending step required");
    // root labels and tree validity
    y = 0;
    size_t j = 0;
    int min_tree_label = INT_MAX;
    for (size_t i = 0; i < c.steps.size(); ++i) {
        if (c.steps[i] == -1 && j < c.trees.size()) {
            const WellLabeledTree& t = c.trees[j++];
            if (t.label != y + c.base)
                out.push_back("tree root label " + std::to_string(t.label) + " != height+base " +
                              std::to_string(y + c.base));
            for (auto& v : validate(t, 1)) out.push_back(v);
            min_tree_label = std::min(min_tree_label, t.min_label());
        }
        y += c.steps[i];
    }
    if (c.base >= 1) {
        // the closure needs a label-1 vertex to attach the origin
        if (c.trees.empty() || min_tree_label != 1)
            out.push_back("base >= 1 requires the minimum tree label to be exactly 1");
    }
    return out;
}

namespace {

void dyck_paths(int p, std::vector<int>& cur, int y, const std::function<void(const std::vector<int>&)>& sink) {
    if (static_cast<int>(cur.size()) == 2 * p) {
        if (y == 0) sink(cur);
        return;
    }
    int rem = 2 * p - static_cast<int>(cur.size());
    if (y + 1 <= rem) {
        cur.push_back(1);
        dyck_paths(p, cur, y + 1, sink);
        cur.pop_back();
    }
    if (y >= 1 && y - 1 <= rem) {
        cur.push_back(-1);
        dyck_paths(p, cur, y - 1, sink);
        cur.pop_back();
    }
}

void fill_trees(const std::vector<int>& roots, size_t idx, int edges_left,
                std::vector<WellLabeledTree>& trees, const std::function<void(const std::vector<WellLabeledTree>&)>& sink) {
    if (idx == roots.size()) {
        if (edges_left == 0) sink(trees);
        return;
    }
    int rest = static_cast<int>(roots.size() - idx - 1);
    (void)rest;
    for (int m = 0; m <= edges_left; ++m) {
        enumerate_trees(m, roots[idx], 1, [&](const WellLabeledTree& t) {
            trees.push_back(t);
            fill_trees(roots, idx + 1, edges_left - m, trees, sink);
            trees.pop_back();
        });
    }
}

void enumerate_objects(int n, int p, int base, bool canonical,
                       const std::function<void(const BoundaryCode&)>& sink) {
    if (n < 0 || p < 1 || base < 0) throw std::invalid_argument("enumerate_codes: need n >= 0, p >= 1, base >= 0");
    if (n > 8 || p > 5) throw std::invalid_argument("enumerate_codes: exhaustive enumeration is desk-scale only");
    std::vector<int> cur;
    dyck_paths(p, cur, 0, [&](const std::vector<int>& steps) {
        std::vector<int> roots;
        int y = 0;
        for (int s : steps) {
            if (s == -1) roots.push_back(y + base);
            y += s;
        }
        std::vector<WellLabeledTree> trees;
        fill_trees(roots, 0, n, trees, [&](const std::vector<WellLabeledTree>& ts) {
            if (canonical && base >= 1) {
                int mn = INT_MAX;
                for (const auto& t : ts) mn = std::min(mn, t.min_label());
                if (mn != 1) return;
            }
            sink(BoundaryCode{base, steps, ts});
        });
    });
}

nlohmann::json tree_to_json(const WellLabeledTree& t) {
    nlohmann::json kids = nlohmann::json::array();
    for (const auto& c : t.children) kids.push_back(tree_to_json(c));
    return nlohmann::json::array({t.label, kids});
}

WellLabeledTree tree_from_json(const nlohmann::json& j) {
    WellLabeledTree t;
    t.label = j.at(0).get<int>();
    for (const auto& c : j.at(1)) t.children.push_back(tree_from_json(c));
    return t;
}

}  // namespace

void enumerate_codes(int n, int p, int base, const std::function<void(const BoundaryCode&)>& sink) {
    enumerate_objects(n, p, base, true, sink);
}

void enumerate_wd_objects(int n, int p, int base, const std::function<void(const BoundaryCode&)>& sink) {
    enumerate_objects(n, p, base, false, sink);
}

nlohmann::json code_to_json(const BoundaryCode& c) {
    nlohmann::json trees = nlohmann::json::array();
    for (const auto& t : c.trees) trees.push_back(tree_to_json(t));
    return nlohmann::json{{"base", c.base}, {"steps", c.steps}, {"trees", trees}};
}

BoundaryCode code_from_json(const nlohmann::json& j) {
    BoundaryCode c;
    c.base = j.at("base").get<int>();
    c.steps = j.at("steps").get<std::vector<int>>();
    for (const auto& t : j.at("trees")) c.trees.push_back(tree_from_json(t));
    return c;
}

}  // namespace quadbound
