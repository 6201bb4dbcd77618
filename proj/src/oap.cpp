#include "plab/oap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "plab/min_cost_flow.hpp"
#include "plab/parallel.hpp"
#include "plab/ratios.hpp"
#include "plab/rng.hpp"

namespace plab::oap {

namespace {

constexpr double kThetaFloor = 1.0 + 1e-12;  // limiting constants for theta = 1 items

AssignmentRatio item_ratio(const Bounds& b) {
    return solve_assignment_ratio(std::max(b.theta, kThetaFloor));
}

}  // namespace

LawSet build_static_laws(const OapInstance& inst) {
    inst.validate();
    LawSet set;
    set.alpha = 1.0;
    set.items.reserve(inst.bounds.size());
    for (const Bounds& b : inst.bounds) {
        const auto sol = item_ratio(b);
        const double scale_low = (sol.alpha - 1.0) * b.L / sol.alpha;
        std::vector<Segment> segs{
            {0.0, sol.omega, Segment::ScaledExp{scale_low, 1.0}},
            {sol.omega, 1.0, Segment::ScaledExp{b.U * std::exp(-sol.alpha), sol.alpha}},
        };
        PriceLaw law(std::move(segs), sol.alpha, b.U);
        const double left = scale_low * std::exp(sol.omega);
        const double right = b.U * std::exp(sol.alpha * (sol.omega - 1.0));
        if (std::abs(left - right) > 1e-8 * b.U)
            throw std::logic_error("oap law: discontinuity at omega");
        set.items.push_back(ItemLaw{std::move(law), sol.omega, sol.alpha});
        set.alpha = std::max(set.alpha, sol.alpha);
    }
    return set;
}

double DynPricer::price(int item, int units_sold) const {
    const Item& it = items_[static_cast<std::size_t>(item)];
    const double y = static_cast<double>(units_sold);
    const double c = static_cast<double>(it.capacity);
    if (y < it.omega * c)
        return it.floor * std::expm1(y / c) / std::expm1(it.omega);
    // coefficient (U-L)/(e^a - e^(wa)), rewritten through
    // a(1-w) = ln(U/L): the raw difference cancels catastrophically and
    // (1-w) itself loses precision as theta -> 1
    const double tail = std::log(it.cap_eff / it.floor);
    return (it.cap_eff - it.floor) * std::exp(it.alpha * (y / c - 1.0)) /
           (-std::expm1(-tail));
}

double DynPricer::alpha() const {
    double a = 1.0;
    for (const auto& it : items_) a = std::max(a, it.alpha);
    return a;
}

DynPricer build_dynamic_pricer(const OapInstance& inst) {
    inst.validate();
    std::vector<DynPricer::Item> items;
    items.reserve(inst.bounds.size());
    for (std::size_t k = 0; k < inst.bounds.size(); ++k) {
        const Bounds& b = inst.bounds[k];
        const auto sol = item_ratio(b);
        const double cap_eff = std::max(b.U, b.L * kThetaFloor);
        items.push_back({b.L, b.U, cap_eff, sol.omega, sol.alpha, inst.capacities[k]});
    }
    return DynPricer(std::move(items));
}

namespace {

// One pass of utility-maximizing buyers; price_at(item, units_already_sold).
// Sold-out items receive no posted price and are excluded from the argmax;
// ties at the maximum utility go to the lowest item index.
template <class PriceAt>
Outcome run_posted(const OapInstance& inst, PriceAt&& price_at) {
    const int k = inst.items();
    Outcome out;
    out.purchased_item.assign(inst.valuations.size(), -1);
    out.units_sold.assign(static_cast<std::size_t>(k), 0);
    for (std::size_t n = 0; n < inst.valuations.size(); ++n) {
        int best = -1;
        double best_utility = 0.0;
        for (int j = 0; j < k; ++j) {
            if (out.units_sold[static_cast<std::size_t>(j)] >=
                inst.capacities[static_cast<std::size_t>(j)])
                continue;
            const double u = inst.valuations[n][static_cast<std::size_t>(j)] -
                             price_at(j, out.units_sold[static_cast<std::size_t>(j)]);
            if (best < 0 || u > best_utility) {
                best_utility = u;
                best = j;
            }
        }
        if (best >= 0 && best_utility >= 0.0) {
            out.purchased_item[n] = best;
            out.welfare += inst.valuations[n][static_cast<std::size_t>(best)];
            out.revenue += price_at(best, out.units_sold[static_cast<std::size_t>(best)]);
            ++out.units_sold[static_cast<std::size_t>(best)];
        }
    }
    out.utility = out.welfare - out.revenue;
    return out;
}

}  // namespace

Outcome run_static(const OapInstance& inst, const std::vector<double>& prices) {
    if (prices.size() != inst.capacities.size())
        throw std::invalid_argument("oap::run_static: one price per item required");
    return run_posted(inst, [&](int j, int) { return prices[static_cast<std::size_t>(j)]; });
}

Outcome run_dynamic(const OapInstance& inst, const DynPricer& pricer) {
    if (pricer.items().size() != inst.capacities.size())
        throw std::invalid_argument("oap::run_dynamic: pricer/instance item mismatch");
    return run_posted(inst, [&](int j, int sold) { return pricer.price(j, sold); });
}

OfflineResult offline_opt(const OapInstance& inst) {
    inst.validate();
    const int n = inst.buyers();
    const int k = inst.items();
    const int source = n + k;
    const int sink = n + k + 1;
    MinCostFlow flow(n + k + 2);
    std::vector<std::vector<std::pair<int, int>>> buyer_arcs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        flow.add_edge(source, i, 1, 0.0);
        for (int j = 0; j < k; ++j) {
            const double v = inst.valuations[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v > 0.0)
                buyer_arcs[static_cast<std::size_t>(i)].push_back(
                    {flow.add_edge(i, n + j, 1, -v), j});
        }
    }
    for (int j = 0; j < k; ++j)
        flow.add_edge(n + j, sink, inst.capacities[static_cast<std::size_t>(j)], 0.0);
    flow.solve(source, sink);

    OfflineResult res;
    res.assignment.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        for (const auto& [arc, j] : buyer_arcs[static_cast<std::size_t>(i)])
            if (flow.flow_on(arc) > 0) {
                res.assignment[static_cast<std::size_t>(i)] = j;
                res.value += inst.valuations[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                break;
            }
    return res;
}

double brute_force_opt(const OapInstance& inst) {
    inst.validate();
    const int n = inst.buyers();
    const int k = inst.items();
    if (n > 10 || k > 3)
        throw std::runtime_error("brute_force_opt: refusing instances beyond N <= 10, K <= 3");
    std::vector<int> left(inst.capacities.begin(), inst.capacities.end());
    double best = 0.0;
    // depth-first over buyer -> {none, item} maps
    auto dfs = [&](auto&& self, int buyer, double value) -> void {
        if (buyer == n) {
            best = std::max(best, value);
            return;
        }
        self(self, buyer + 1, value);
        for (int j = 0; j < k; ++j) {
            const double v =
                inst.valuations[static_cast<std::size_t>(buyer)][static_cast<std::size_t>(j)];
            if (v <= 0.0 || left[static_cast<std::size_t>(j)] == 0) continue;
            --left[static_cast<std::size_t>(j)];
            self(self, buyer + 1, value + v);
            ++left[static_cast<std::size_t>(j)];
        }
    };
    dfs(dfs, 0, 0.0);
    return best;
}

McStats mc_expected(const OapInstance& inst, const LawSet& laws, Objective objective,
                    std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("mc_expected: trials must be >= 1");
    const int k = inst.items();
    constexpr std::uint64_t kChunk = 4096;
    const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
    auto results = run_chunks_ordered(chunks, [&](std::uint64_t c) {
        std::vector<double> prices(static_cast<std::size_t>(k));
        std::vector<int> sold(static_cast<std::size_t>(k));
        double sum = 0.0;
        double sumsq = 0.0;
        const std::uint64_t hi = std::min(trials, (c + 1) * kChunk);
        for (std::uint64_t t = c * kChunk; t < hi; ++t) {
            for (int j = 0; j < k; ++j)
                prices[static_cast<std::size_t>(j)] =
                    laws.items[static_cast<std::size_t>(j)].law.price(
                        counter_uniform(seed, t, static_cast<std::uint64_t>(j)));
            std::fill(sold.begin(), sold.end(), 0);
            double welfare = 0.0;
            double revenue = 0.0;
            for (const auto& vals : inst.valuations) {
                int best = -1;
                double best_utility = 0.0;
                for (int j = 0; j < k; ++j) {
                    if (sold[static_cast<std::size_t>(j)] >=
                        inst.capacities[static_cast<std::size_t>(j)])
                        continue;
                    const double u = vals[static_cast<std::size_t>(j)] -
                                     prices[static_cast<std::size_t>(j)];
                    if (best < 0 || u > best_utility) {
                        best_utility = u;
                        best = j;
                    }
                }
                if (best >= 0 && best_utility >= 0.0) {
                    ++sold[static_cast<std::size_t>(best)];
                    welfare += vals[static_cast<std::size_t>(best)];
                    revenue += prices[static_cast<std::size_t>(best)];
                }
            }
            const double val = objective == Objective::welfare ? welfare : revenue;
            sum += val;
            sumsq += val * val;
        }
        return std::pair<double, double>{sum, sumsq};
    });
    double sum = 0.0;
    double sumsq = 0.0;
    for (const auto& [s, sq] : results) {
        sum += s;
        sumsq += sq;
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

}  // namespace plab::oap
