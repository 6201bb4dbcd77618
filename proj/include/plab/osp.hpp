#pragma once

#include <cstdint>
#include <vector>

#include "plab/instance.hpp"
#include "plab/outcome.hpp"
#include "plab/price_law.hpp"

namespace plab::osp {

/// Inverse-CDF law for C-unit selection: alpha = 1 + ln(theta), floor price
/// on [0, 1/alpha), then L*exp(alpha*x - 1) up to the cap at x = 1.
/// theta = 1 degenerates to a point mass at L.
PriceLaw build_static_law(const Bounds& bounds);

/// Price ladder for deterministic selling: the z-th unit's price. The first
/// low_price_units units go at the floor, then a geometric ramp whose end
/// ties the ladder to the defining equation of alpha.
struct DynamicSchedule {
    std::vector<double> prices;  // prices[z-1] = price of the z-th unit
    double alpha;
    int low_price_units;
};

DynamicSchedule build_dynamic_schedule(int capacity, const Bounds& bounds);

/// Greedy sale at one fixed price: buyers with v >= price (ties accept) buy
/// in arrival order until stock runs out.
Outcome run_static(const OspInstance& inst, double price);

/// The z-th unit is offered at schedule.prices[z-1]; acceptance rule as in
/// run_static.
Outcome run_dynamic(const OspInstance& inst, const DynamicSchedule& schedule);

struct OfflineResult {
    double value = 0.0;
    std::vector<int> selected;  // buyer indices, earliest-arrival tie-break
};

/// Sum of the min(C, N) largest valuations.
OfflineResult offline_opt(const OspInstance& inst);

/// Exact expectation over the law's single uniform draw. The accepted set is
/// constant between consecutive breakpoints {cdf(v_n)} and segment edges, so
/// the objective integrates piecewise (revenue pieces use the law's segment
/// integrals).
double exact_expected(const OspInstance& inst, const PriceLaw& law, Objective objective);

/// Monte Carlo estimate of the same expectation (test oracle and CLI mode).
McStats mc_expected(const OspInstance& inst, const PriceLaw& law, Objective objective,
                    std::uint64_t trials, std::uint64_t seed);

/// Price ladder restricted to a finite set of levels V_1 < ... < V_m.
/// masses[i] = 1 - V_{i-1}/V_i (V_0 := 0), ratio = sum of masses, and the
/// law posts V_i on (Q_{i-1}, Q_i] with Q_i the normalized partial sums.
struct SingleLegLaw {
    std::vector<double> levels;
    std::vector<double> masses;
    std::vector<double> breakpoints;
    double ratio;  // the competitive ratio q of this ladder
    PriceLaw law;
};

SingleLegLaw build_single_leg_law(const std::vector<double>& levels);

}  // namespace plab::osp
