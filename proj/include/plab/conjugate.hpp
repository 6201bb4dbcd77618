#pragma once

#include <vector>

#include "plab/convex_cost.hpp"

namespace plab {

/// Piecewise-linear maximum-profit function of a flat valuation v:
///
///   profit(v) = max over y in {0..C} of  v*y - cost(y)
///
/// The slope of the active linear piece is the profit-maximizing quantity;
/// ties resolve to the largest maximizer, so best_quantity(v) is the largest
/// y whose marginal cost does not exceed v. Nondecreasing and convex in v.
class Conjugate {
public:
    explicit Conjugate(ConvexCost cost);

    struct Point {
        double profit;   // h(v)
        int quantity;    // largest maximizer
    };

    /// O(log C): locates the active piece by binary search over marginals.
    Point value(double v) const;

    int best_quantity(double v) const;

    /// Inverse on the strictly increasing region v >= c_1 (profit >= 0).
    /// Throws std::domain_error for profit < 0.
    double inverse(double profit) const;

    const ConvexCost& cost() const { return cost_; }

private:
    ConvexCost cost_;
    std::vector<double> marginals_;        // c_1..c_C, nondecreasing
    std::vector<double> profit_at_break_;  // profit at v = c_y, y = 1..C
};

}  // namespace plab
