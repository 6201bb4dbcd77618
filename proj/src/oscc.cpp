#include "plab/oscc.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "plab/rng.hpp"

namespace plab::oscc {

int effective_capacity(const ConvexCost& cost, double top_valuation) {
    return Conjugate(cost).best_quantity(top_valuation);
}

PriceLaw build_static_law(const ConvexCost& cost, const Bounds& bounds) {
    auto conj = std::make_shared<const Conjugate>(cost);
    const double profit_floor = conj->value(bounds.L).profit;
    const double profit_cap = conj->value(bounds.U).profit;
    if (!(profit_floor > 0.0))
        throw std::domain_error(
            "oscc::build_static_law: selling at the floor price is unprofitable "
            "(first marginal cost >= L)");
    const double alpha = 1.0 + std::log(profit_cap / profit_floor);
    if (profit_cap == profit_floor) {
        std::vector<Segment> segs{{0.0, 1.0, Segment::Constant{bounds.L}}};
        return PriceLaw(std::move(segs), 1.0, bounds.U);
    }
    const double knee = 1.0 / alpha;
    std::vector<Segment> segs{
        {0.0, knee, Segment::Constant{bounds.L}},
        {knee, 1.0, Segment::ConjugateCurve{conj, profit_floor, alpha}},
    };
    return PriceLaw(std::move(segs), alpha, bounds.U);
}

namespace {

struct Sale {
    int units = 0;
    double value = 0.0;  // gross, before production cost
};

Sale sell_at_price(const std::vector<double>& valuations, int cap, double price) {
    Sale s;
    for (double v : valuations) {
        if (v >= price) {
            ++s.units;
            s.value += v;
            if (s.units == cap) break;
        }
    }
    return s;
}

}  // namespace

Outcome run_static(const OsccInstance& inst, double price) {
    if (price < 0.0) throw std::domain_error("oscc::run_static: negative price");
    const Conjugate conj(inst.cost);
    const int cap = conj.best_quantity(price);
    Outcome out;
    out.purchased_item.assign(inst.valuations.size(), -1);
    out.units_sold.assign(1, 0);
    double gross = 0.0;
    int z = 0;
    for (std::size_t n = 0; n < inst.valuations.size(); ++n) {
        const double v = inst.valuations[n];
        if (v >= price && z < cap) {
            ++z;
            out.purchased_item[n] = 0;
            gross += v;
        }
    }
    out.units_sold[0] = z;
    out.revenue = z * price;
    out.welfare = gross - inst.cost.total(z);
    out.utility = gross - out.revenue;
    return out;
}

OfflineResult offline_opt(const OsccInstance& inst) {
    std::vector<double> sorted = inst.valuations;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const int limit = std::min<int>(static_cast<int>(sorted.size()), inst.capacity());
    OfflineResult best;  // k = 0 yields 0 at zero setup cost
    double prefix = 0.0;
    for (int k = 1; k <= limit; ++k) {
        prefix += sorted[static_cast<std::size_t>(k) - 1];
        const double value = prefix - inst.cost.total(k);
        if (value >= best.value) {
            best.value = value;
            best.units = k;
        }
    }
    return best;
}

double exact_expected(const OsccInstance& inst, const PriceLaw& law, Objective objective) {
    const Conjugate conj(inst.cost);
    std::vector<double> cuts{0.0, 1.0};
    for (const auto& s : law.segments()) cuts.push_back(s.x_lo);
    for (double v : inst.valuations) cuts.push_back(law.cdf(v));
    for (int y = 1; y <= inst.capacity(); ++y) cuts.push_back(law.cdf(inst.cost.marginal(y)));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        if (!(b > a)) continue;
        const double p = law.price(a + 0.5 * (b - a));
        const Sale s = sell_at_price(inst.valuations, conj.best_quantity(p), p);
        if (objective == Objective::welfare)
            total += (s.value - inst.cost.total(s.units)) * (b - a);
        else
            total += s.units * law.integral(a, b);
    }
    return total;
}

McStats mc_expected(const OsccInstance& inst, const PriceLaw& law, Objective objective,
                    std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("mc_expected: trials must be >= 1");
    const Conjugate conj(inst.cost);
    double sum = 0.0;
    double sumsq = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double p = law.price(counter_uniform(seed, t, 0));
        const Sale s = sell_at_price(inst.valuations, conj.best_quantity(p), p);
        const double val = objective == Objective::welfare
                               ? s.value - inst.cost.total(s.units)
                               : s.units * p;
        sum += val;
        sumsq += val * val;
    }
    const double mean = sum / static_cast<double>(trials);
    McStats stats{mean, 0.0};
    if (trials > 1) {
        const double var =
            std::max(0.0, (sumsq - static_cast<double>(trials) * mean * mean) /
                              static_cast<double>(trials - 1));
        stats.stderr_ = std::sqrt(var / static_cast<double>(trials));
    }
    return stats;
}

}  // namespace plab::oscc
