#include "plab/osp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "plab/ratios.hpp"
#include "plab/rng.hpp"

namespace plab::osp {

PriceLaw build_static_law(const Bounds& bounds) {
    const double alpha = 1.0 + std::log(bounds.theta);
    if (bounds.theta == 1.0) {
        std::vector<Segment> segs{{0.0, 1.0, Segment::Constant{bounds.L}}};
        return PriceLaw(std::move(segs), 1.0, bounds.U);
    }
    const double knee = 1.0 / alpha;
    std::vector<Segment> segs{
        {0.0, knee, Segment::Constant{bounds.L}},
        {knee, 1.0, Segment::ScaledExp{bounds.L * std::exp(-1.0), alpha}},
    };
    return PriceLaw(std::move(segs), alpha, bounds.U);
}

DynamicSchedule build_dynamic_schedule(int capacity, const Bounds& bounds) {
    const auto sol = solve_finite_supply_ratio(capacity, bounds.theta);
    const int gamma = sol.low_price_units;
    const double alpha = sol.alpha;
    std::vector<double> prices(static_cast<std::size_t>(capacity));
    const double step = 1.0 + alpha / capacity;
    for (int z = 1; z <= capacity; ++z) {
        prices[static_cast<std::size_t>(z) - 1] =
            z <= gamma ? bounds.L
                       : gamma * bounds.L * alpha / capacity * std::pow(step, z - gamma - 1);
    }
    return DynamicSchedule{std::move(prices), alpha, gamma};
}

Outcome run_static(const OspInstance& inst, double price) {
    if (price < 0.0) throw std::domain_error("run_static: negative price");
    Outcome out;
    out.purchased_item.assign(inst.valuations.size(), -1);
    out.units_sold.assign(1, 0);
    int z = 0;
    for (std::size_t n = 0; n < inst.valuations.size(); ++n) {
        const double v = inst.valuations[n];
        if (v >= price && z < inst.capacity) {
            ++z;
            out.purchased_item[n] = 0;
            out.welfare += v;
            out.revenue += price;
        }
    }
    out.units_sold[0] = z;
    out.utility = out.welfare - out.revenue;
    return out;
}

Outcome run_dynamic(const OspInstance& inst, const DynamicSchedule& schedule) {
    if (static_cast<int>(schedule.prices.size()) != inst.capacity)
        throw std::invalid_argument("run_dynamic: schedule length must equal capacity");
    Outcome out;
    out.purchased_item.assign(inst.valuations.size(), -1);
    out.units_sold.assign(1, 0);
    int z = 0;
    for (std::size_t n = 0; n < inst.valuations.size(); ++n) {
        const double v = inst.valuations[n];
        if (z < inst.capacity && v >= schedule.prices[static_cast<std::size_t>(z)]) {
            out.purchased_item[n] = 0;
            out.welfare += v;
            out.revenue += schedule.prices[static_cast<std::size_t>(z)];
            ++z;
        }
    }
    out.units_sold[0] = z;
    out.utility = out.welfare - out.revenue;
    return out;
}

OfflineResult offline_opt(const OspInstance& inst) {
    const std::size_t n = inst.valuations.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.valuations[static_cast<std::size_t>(a)] >
               inst.valuations[static_cast<std::size_t>(b)];
    });
    const std::size_t take = std::min(n, static_cast<std::size_t>(inst.capacity));
    OfflineResult res;
    res.selected.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
    std::sort(res.selected.begin(), res.selected.end());
    for (int i : res.selected) res.value += inst.valuations[static_cast<std::size_t>(i)];
    return res;
}

namespace {

// Sold count and sold-valuation sum at one fixed price.
struct GreedySale {
    int units = 0;
    double value = 0.0;
};

GreedySale greedy_at_price(const std::vector<double>& valuations, int capacity, double price) {
    GreedySale g;
    for (double v : valuations) {
        if (v >= price) {
            ++g.units;
            g.value += v;
            if (g.units == capacity) break;
        }
    }
    return g;
}

}  // namespace

double exact_expected(const OspInstance& inst, const PriceLaw& law, Objective objective) {
    std::vector<double> cuts{0.0, 1.0};
    for (const auto& s : law.segments()) cuts.push_back(s.x_lo);
    for (double v : inst.valuations) cuts.push_back(law.cdf(v));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        if (!(b > a)) continue;
        const double p = law.price(a + 0.5 * (b - a));
        const GreedySale g = greedy_at_price(inst.valuations, inst.capacity, p);
        if (objective == Objective::welfare)
            total += g.value * (b - a);
        else
            total += g.units * law.integral(a, b);
    }
    return total;
}

McStats mc_expected(const OspInstance& inst, const PriceLaw& law, Objective objective,
                    std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("mc_expected: trials must be >= 1");
    double sum = 0.0;
    double sumsq = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double p = law.price(counter_uniform(seed, t, 0));
        const GreedySale g = greedy_at_price(inst.valuations, inst.capacity, p);
        const double val = objective == Objective::welfare ? g.value : g.units * p;
        sum += val;
        sumsq += val * val;
    }
    const double mean = sum / static_cast<double>(trials);
    McStats s{mean, 0.0};
    if (trials > 1) {
        const double var =
            std::max(0.0, (sumsq - static_cast<double>(trials) * mean * mean) /
                              static_cast<double>(trials - 1));
        s.stderr_ = std::sqrt(var / static_cast<double>(trials));
    }
    return s;
}

SingleLegLaw build_single_leg_law(const std::vector<double>& levels) {
    if (levels.empty()) throw std::domain_error("single-leg: need at least one price level");
    if (!(levels.front() > 0.0))
        throw std::domain_error("single-leg: price levels must be positive");
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (!(levels[i] > levels[i - 1]))
            throw std::domain_error("single-leg: price levels must be strictly increasing");

    const std::size_t m = levels.size();
    std::vector<double> masses(m);
    double prev = 0.0;  // V_0 := 0, so the first mass is exactly 1
    double q = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        masses[i] = 1.0 - prev / levels[i];
        q += masses[i];
        prev = levels[i];
    }
    std::vector<double> breakpoints(m);
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        acc += masses[i];
        breakpoints[i] = acc / q;
    }
    breakpoints.back() = 1.0;

    std::vector<Segment> segs;
    segs.reserve(m);
    double lo = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        segs.push_back({lo, breakpoints[i], Segment::Constant{levels[i]}});
        lo = breakpoints[i];
    }
    PriceLaw law(std::move(segs), q, levels.back());
    return SingleLegLaw{levels, std::move(masses), std::move(breakpoints), q, std::move(law)};
}

}  // namespace plab::osp
