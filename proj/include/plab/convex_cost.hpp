#pragma once

#include <stdexcept>
#include <vector>

namespace plab {

/// Production cost for 0..C units, stored cumulatively. f(0) = 0 and the
/// marginals c_i = f(i) - f(i-1) are nonnegative and nondecreasing.
class ConvexCost {
public:
    static ConvexCost from_cumulative(std::vector<double> cumulative) {
        if (cumulative.size() < 2)
            throw std::invalid_argument("ConvexCost: need f(0..C) with C >= 1");
        if (cumulative.front() != 0.0)
            throw std::invalid_argument("ConvexCost: f(0) must be 0");
        double prev_marginal = 0.0;
        for (std::size_t i = 1; i < cumulative.size(); ++i) {
            const double m = cumulative[i] - cumulative[i - 1];
            if (m < 0.0)
                throw std::invalid_argument("ConvexCost: decreasing cumulative cost");
            if (m + 1e-15 < prev_marginal)
                throw std::invalid_argument("ConvexCost: marginals must be nondecreasing");
            prev_marginal = m;
        }
        ConvexCost c;
        c.cumulative_ = std::move(cumulative);
        return c;
    }

    static ConvexCost from_marginals(const std::vector<double>& marginals) {
        std::vector<double> f{0.0};
        f.reserve(marginals.size() + 1);
        for (double m : marginals) f.push_back(f.back() + m);
        return from_cumulative(std::move(f));
    }

    static ConvexCost zero(int capacity) {
        return from_cumulative(std::vector<double>(static_cast<std::size_t>(capacity) + 1, 0.0));
    }

    int capacity() const { return static_cast<int>(cumulative_.size()) - 1; }

    double total(int units) const { return cumulative_[static_cast<std::size_t>(units)]; }

    /// c_i for i in 1..C
    double marginal(int i) const {
        return cumulative_[static_cast<std::size_t>(i)] - cumulative_[static_cast<std::size_t>(i) - 1];
    }

    const std::vector<double>& cumulative() const { return cumulative_; }

private:
    std::vector<double> cumulative_;
};

}  // namespace plab
