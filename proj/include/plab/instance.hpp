#pragma once

#include <vector>

#include "plab/bounds.hpp"
#include "plab/convex_cost.hpp"

namespace plab {

/// Single item, C identical units, arrival-ordered buyer valuations in [L, U].
struct OspInstance {
    int capacity = 1;
    Bounds bounds;
    std::vector<double> valuations;

    void validate() const;
};

/// K items with per-item capacities and bounds; valuation vectors by arrival.
/// v[n][k] = 0 means buyer n is not interested in item k, otherwise the
/// valuation lies within item k's bounds.
struct OapInstance {
    std::vector<int> capacities;
    std::vector<Bounds> bounds;
    std::vector<std::vector<double>> valuations;  // [buyer][item]

    int items() const { return static_cast<int>(capacities.size()); }
    int buyers() const { return static_cast<int>(valuations.size()); }

    void validate() const;
};

/// Single item produced at convex cost; capacity comes from the cost table.
struct OsccInstance {
    ConvexCost cost = ConvexCost::zero(1);
    Bounds bounds;
    std::vector<double> valuations;

    int capacity() const { return cost.capacity(); }

    void validate() const;
};

}  // namespace plab
