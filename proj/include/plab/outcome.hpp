#pragma once

#include <numeric>
#include <vector>

namespace plab {

enum class Objective { welfare, revenue };

inline const char* to_string(Objective o) {
    return o == Objective::welfare ? "welfare" : "revenue";
}

/// Result of replaying a posted-price algorithm on one instance.
/// For selection without production cost, welfare = revenue + utility holds
/// exactly because utility is stored as the difference.
struct Outcome {
    std::vector<int> purchased_item;  // per buyer; -1 = no purchase
    std::vector<int> units_sold;      // per item
    double welfare = 0.0;
    double revenue = 0.0;
    double utility = 0.0;

    int total_units() const {
        return std::accumulate(units_sold.begin(), units_sold.end(), 0);
    }

    double objective_value(Objective o) const {
        return o == Objective::welfare ? welfare : revenue;
    }
};

/// Monte Carlo estimate with its standard error (0 for degenerate samples).
struct McStats {
    double mean = 0.0;
    double stderr_ = 0.0;
};

}  // namespace plab
