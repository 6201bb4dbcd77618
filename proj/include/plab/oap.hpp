#pragma once

#include <cstdint>
#include <vector>

#include "plab/instance.hpp"
#include "plab/outcome.hpp"
#include "plab/price_law.hpp"

namespace plab::oap {

/// Per-item inverse-CDF law: (alpha-1)L/alpha * e^x on [0, omega), then
/// U * e^(alpha(x-1)) up to 1, continuous at omega. Items with theta = 1 use
/// the limiting constants of theta -> 1.
struct ItemLaw {
    PriceLaw law;
    double omega;
    double alpha;
};

struct LawSet {
    std::vector<ItemLaw> items;
    double alpha;  // max over items
};

LawSet build_static_laws(const OapInstance& inst);

/// Per-item price as a function of units already sold: a scaled exp ramp
/// that reaches the floor price at omega*C sold units and the cap at C.
class DynPricer {
public:
    struct Item {
        double floor;      // L_k
        double cap;        // U_k
        double cap_eff;    // cap, nudged up when cap == floor (degenerate ratio)
        double omega;
        double alpha;
        int capacity;
    };

    explicit DynPricer(std::vector<Item> items) : items_(std::move(items)) {}

    double price(int item, int units_sold) const;
    double alpha() const;
    const std::vector<Item>& items() const { return items_; }

private:
    std::vector<Item> items_;
};

DynPricer build_dynamic_pricer(const OapInstance& inst);

/// One pass of utility-maximizing buyers over fixed per-item prices. Sold-out
/// items carry no posted price, so buyers maximize utility over the items
/// with remaining stock (ties to the lowest index) and walk away when the
/// best available utility is negative or nothing is in stock.
Outcome run_static(const OapInstance& inst, const std::vector<double>& prices);

/// Same buyer rule with prices refreshed from current sold counts.
Outcome run_dynamic(const OapInstance& inst, const DynPricer& pricer);

struct OfflineResult {
    double value = 0.0;
    std::vector<int> assignment;  // per buyer; -1 = unassigned
};

/// Exact assignment optimum via min-cost max-flow over
/// source -> buyers (cap 1) -> items (arcs where v > 0, cost -v) -> sink
/// (cap C_k), keeping the best value over all flow magnitudes.
OfflineResult offline_opt(const OapInstance& inst);

/// Exhaustive oracle; refuses instances beyond N <= 10 or K <= 3.
double brute_force_opt(const OapInstance& inst);

/// Monte Carlo expectation over K independent uniform draws per trial from
/// a counter-based generator keyed by (seed, trial, item): bit-reproducible
/// for a fixed seed, independent of execution order and thread count.
McStats mc_expected(const OapInstance& inst, const LawSet& laws, Objective objective,
                    std::uint64_t trials, std::uint64_t seed);

}  // namespace plab::oap
