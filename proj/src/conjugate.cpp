#include "plab/conjugate.hpp"

#include <algorithm>
#include <stdexcept>

namespace plab {

Conjugate::Conjugate(ConvexCost cost) : cost_(std::move(cost)) {
    const int c = cost_.capacity();
    marginals_.reserve(static_cast<std::size_t>(c));
    for (int i = 1; i <= c; ++i) marginals_.push_back(cost_.marginal(i));
    profit_at_break_.reserve(static_cast<std::size_t>(c));
    for (int y = 1; y <= c; ++y) {
        const double v = marginals_[static_cast<std::size_t>(y) - 1];
        profit_at_break_.push_back(v * y - cost_.total(y));
    }
}

int Conjugate::best_quantity(double v) const {
    // largest y with c_y <= v; marginals are nondecreasing
    auto it = std::upper_bound(marginals_.begin(), marginals_.end(), v);
    return static_cast<int>(it - marginals_.begin());
}

Conjugate::Point Conjugate::value(double v) const {
    const int y = best_quantity(v);
    return Point{v * y - cost_.total(y), y};
}

double Conjugate::inverse(double profit) const {
    if (profit < 0.0)
        throw std::domain_error("Conjugate::inverse: profit below the invertible range");
    // active piece: largest y whose breakpoint profit is <= target
    auto it = std::upper_bound(profit_at_break_.begin(), profit_at_break_.end(), profit);
    int y = static_cast<int>(it - profit_at_break_.begin());
    if (y < 1) y = 1;  // profit in [0, profit_at_break_[0]] sits on the first piece
    return (profit + cost_.total(y)) / y;
}

}  // namespace plab
