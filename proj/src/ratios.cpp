#include "plab/ratios.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "plab/roots.hpp"

namespace plab {

namespace {

double ladder_equation(int c, int gamma, double theta, double alpha) {
    // increasing in alpha for every fixed gamma <= C
    return std::pow(1.0 + alpha / c, c - gamma) - c * theta / (gamma * alpha);
}

}  // namespace

FiniteSupplyRatio solve_finite_supply_ratio(int capacity, double theta) {
    if (capacity < 1)
        throw std::domain_error("solve_finite_supply_ratio: capacity must be >= 1");
    if (theta < 1.0)
        throw std::domain_error("solve_finite_supply_ratio: theta must be >= 1");
    if (theta == 1.0) return {1.0, capacity, 0.0};
    if (capacity == 1) return {theta, 1, 0.0};  // (1+a)^0 = theta/a

    const int c = capacity;
    double best_alpha = std::numeric_limits<double>::infinity();
    int best_gamma = 0;
    for (int gamma = 1; gamma <= c; ++gamma) {
        auto f = [&](double a) { return ladder_equation(c, gamma, theta, a); };
        double lo = 1e-9;
        double hi = theta;
        int grow = 0;
        while (f(hi) < 0.0 && grow++ < 200) hi *= 2.0;
        if (f(hi) < 0.0 || f(lo) > 0.0) continue;
        const double alpha = bisect(f, lo, hi, {0.0, 200});
        if (alpha < 1.0) continue;
        if (static_cast<int>(std::ceil(c / alpha)) != gamma) continue;
        if (alpha < best_alpha) {
            best_alpha = alpha;
            best_gamma = gamma;
        }
    }
    if (best_gamma == 0)
        throw std::logic_error("solve_finite_supply_ratio: no consistent (gamma, alpha) pair");
    return {best_alpha, best_gamma,
            std::abs(ladder_equation(c, best_gamma, theta, best_alpha))};
}

AssignmentRatio solve_assignment_ratio(double theta) {
    if (!(theta > 1.0))
        throw std::domain_error("solve_assignment_ratio: theta must be > 1");
    const double log_theta = std::log(theta);
    // (1-w)*e^w/(e^w-1) decreases from +inf to 0 on (0, 1]
    auto f = [&](double w) {
        return (1.0 - w) * std::exp(w) / std::expm1(w) - log_theta;
    };
    const double omega = bisect(f, 1e-300, 1.0, {0.0, 200});
    const double alpha = std::exp(omega) / std::expm1(omega);
    return {omega, alpha, std::abs(alpha * (1.0 - omega) - log_theta)};
}

double required_sales(int capacity, double alpha, double floor_price, double v) {
    if (v < floor_price)
        throw std::domain_error("required_sales: v below the price floor");
    return capacity * ((1.0 + std::log(v / floor_price)) / alpha);
}

}  // namespace plab
