#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadbound/well_labeled_tree.hpp"

namespace quadbound {

/// Dyck-path skeleton of a pointed quadrangulation with boundary: a path of
/// +-1 steps returning to zero, with a well-labeled tree hanging at every
/// descending step. The tree at a descent from height h has root label
/// h + base; base is the origin-boundary distance. The linear (as opposed to
/// cyclic) path also records a marked boundary edge base -> base+1 at the
/// opening.
struct BoundaryCode {
    int base = 0;
    std::vector<int> steps;             // +1 / -1, even length, heights stay >= 0
    std::vector<WellLabeledTree> trees;  // one per descending step, in step order

    bool operator==(const BoundaryCode&) const = default;

    int half_perimeter() const { return static_cast<int>(steps.size()) / 2; }
    int area() const;
    // heights before each step (size steps.size(); h[0] = 0)
    std::vector<int> heights() const;
};

/// Empty iff the code is a canonical image of a pointed quadrangulation with
/// a marked closest edge: valid Dyck path, matching root labels, tree labels
/// >= 1, and for base >= 1 a global tree-label minimum of exactly 1 (base 0
/// needs no further condition).
std::vector<std::string> validate(const BoundaryCode& c);

/// All canonical codes with given area, half-perimeter and base. Exhaustive;
/// guarded to desk scale.
void enumerate_codes(int n, int p, int base, const std::function<void(const BoundaryCode&)>& sink);

/// Same skeletons without the minimum-label condition: the marked objects
/// whose count is the (g^n z^p) coefficient of the cumulative-distance
/// generating function at distance parameter `base`.
void enumerate_wd_objects(int n, int p, int base, const std::function<void(const BoundaryCode&)>& sink);

nlohmann::json code_to_json(const BoundaryCode& c);
BoundaryCode code_from_json(const nlohmann::json& j);

}  // namespace quadbound
