#pragma once

#include <string>
#include <vector>

#include "quadbound/kernel.hpp"

namespace quadbound {

struct IdentityReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> items;

    bool all_pass() const;
};

/// Exact cross-checks of the generating-function layer at the given orders:
/// the W_d recursion, the conserved quantity, continued-fraction truncations,
/// the boundary-weight substitution identities, the binomial summation
/// identity, and the closest-edge ratio. Every item must pass; a failure
/// means a library bug (or a wrong formula).
IdentityReport verify_identities(int order_n, int order_p, int d_max);

}  // namespace quadbound
