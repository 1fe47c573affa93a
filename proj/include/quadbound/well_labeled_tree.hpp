#pragma once

#include <functional>
#include <string>
#include <vector>

namespace quadbound {

/// Plane tree with an integer label per vertex. Labels of adjacent vertices
/// differ by at most one and every label is at least one (the floor can be
/// shifted for relative-label work).
struct WellLabeledTree {
    int label = 1;
    std::vector<WellLabeledTree> children;

    bool operator==(const WellLabeledTree&) const = default;

    int edge_count() const;
    int min_label() const;
};

std::vector<std::string> validate(const WellLabeledTree& t, int floor = 1);

/// All well-labeled trees with m edges, root label `root`, labels >= floor.
void enumerate_trees(int m, int root, int floor, const std::function<void(const WellLabeledTree&)>& sink);
long count_trees(int m, int root, int floor = 1);

}  // namespace quadbound
