#pragma once

#include <cstdint>

#include "plab/conjugate.hpp"
#include "plab/instance.hpp"
#include "plab/outcome.hpp"
#include "plab/price_law.hpp"

namespace plab::oscc {

/// Largest unit count whose marginal production cost does not exceed the
/// top valuation; producing beyond it can never pay off.
int effective_capacity(const ConvexCost& cost, double top_valuation);

/// Inverse-CDF law for selection with convex cost: floor price on
/// [0, 1/alpha), then the conjugate-curve ramp with
/// alpha = 1 + ln(profit(U)/profit(L)). Requires profit(L) > 0 (a single
/// unit at the floor price must be profitable), otherwise domain error.
/// With zero cost this reduces to the plain selection law.
PriceLaw build_static_law(const ConvexCost& cost, const Bounds& bounds);

/// Greedy sale at one fixed price. Production stops once the next unit's
/// marginal cost exceeds the posted price (equivalently at the conjugate's
/// best quantity for that price), which caps sales at the effective
/// capacity when price = U. welfare = sold valuations - production cost;
/// revenue stays gross of cost.
Outcome run_static(const OsccInstance& inst, double price);

struct OfflineResult {
    double value = 0.0;
    int units = 0;  // largest maximizer on ties
};

/// Best prefix of the descending valuations net of production cost.
OfflineResult offline_opt(const OsccInstance& inst);

/// Exact expectation over the single uniform draw; pieces additionally cut
/// at the marginal-cost crossings so the per-piece sale is constant.
double exact_expected(const OsccInstance& inst, const PriceLaw& law,
                      Objective objective = Objective::welfare);

McStats mc_expected(const OsccInstance& inst, const PriceLaw& law, Objective objective,
                    std::uint64_t trials, std::uint64_t seed);

}  // namespace plab::oscc
