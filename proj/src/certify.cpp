#include "plab/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <stdexcept>

#include "plab/adversary.hpp"
#include "plab/evaluate.hpp"
#include "plab/oap.hpp"
#include "plab/oscc.hpp"
#include "plab/osp.hpp"
#include "plab/ratios.hpp"
#include "plab/rng.hpp"
#include "plab/sweep.hpp"

namespace plab {

namespace {

constexpr double kRelTol = 1e-9;  // guarantee slack for exact expectations
constexpr double kEulerRatio = 1.5819767068693265;  // e/(e-1)

std::uint64_t subseed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(seed + a * kGolden) + b * kGolden);
}

struct Tally {
    long checks = 0;
    long failures = 0;
    long statistical_failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what, bool is_statistical = false) {
        ++checks;
        if (ok) return;
        ++failures;
        if (is_statistical) ++statistical_failures;
        if (first_failure.empty()) first_failure = what;
    }

    void fold_into(SuiteResult& r) const {
        r.checks = checks;
        r.failures = failures;
        r.statistical = failures > 0 && failures == statistical_failures;
        r.pass = failures == 0;
        if (!first_failure.empty()) r.details += "; first failure: " + first_failure;
    }
};

struct OspConfig {
    double theta;
    int capacity;
};

constexpr OspConfig kOspConfigs[] = {{2.0, 1}, {2.0, 5}, {2.0, 50},
                                     {10.0, 1}, {10.0, 5}, {10.0, 50}};

OspInstance random_osp_instance(const Bounds& bounds, int capacity, int max_buyers,
                                std::uint64_t seed, bool sorted) {
    SplitMix64 rng(seed);
    const int n = rng.range(1, max_buyers);
    OspInstance inst{capacity, bounds, {}};
    inst.valuations.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inst.valuations.push_back(rng.uniform(bounds.L, bounds.U));
    if (sorted) std::sort(inst.valuations.begin(), inst.valuations.end());
    return inst;
}

// criterion 1
SuiteResult suite_osp_static_welfare(const CertifyConfig& cfg) {
    SuiteResult r;
    r.name = "osp_static_welfare";
    r.criterion = 1;
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t c = 0; c < std::size(kOspConfigs); ++c) {
        const auto bounds = Bounds::of(1.0, kOspConfigs[c].theta);
        const PriceLaw law = osp::build_static_law(bounds);
        for (int i = 0; i < 1000; ++i) {
            const auto inst = random_osp_instance(bounds, kOspConfigs[c].capacity, 200,
                                                  subseed(cfg.seed, 100 + c, static_cast<std::uint64_t>(i)),
                                                  i % 2 == 1);
            const double expected = osp::exact_expected(inst, law, Objective::welfare);
            const double opt = osp::offline_opt(inst).value;
            t.check(expected * law.alpha() >= opt * (1.0 - kRelTol),
                    "welfare bound at theta=" + format_double(kOspConfigs[c].theta) +
                        " C=" + std::to_string(kOspConfigs[c].capacity) +
                        " i=" + std::to_string(i));
            if (i < 2) r.reports.push_back(evaluate(AnyInstance{inst}, EvalRequest{}));
        }
    }
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.check(r.elapsed_seconds < 60.0, "runtime budget 60 s");
    r.details = "6000 instances, bound E*alpha >= OPT at 1e-9 relative";
    t.fold_into(r);
    return r;
}

// criterion 2
SuiteResult suite_osp_tightness(const CertifyConfig&) {
    SuiteResult r;
    r.name = "osp_tightness";
    r.criterion = 2;
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    const auto bounds = Bounds::of(1.0, 10.0);
    const auto inst = adversary::osp_batched_increasing(50, bounds, 2000, bounds.U);
    const PriceLaw law = osp::build_static_law(bounds);
    const double expected = osp::exact_expected(inst, law, Objective::welfare);
    const double opt = osp::offline_opt(inst).value;
    const double ratio = opt / expected;
    const double alpha = law.alpha();
    t.check(ratio >= 0.99 * alpha, "ratio above 0.99*alpha");
    t.check(ratio <= alpha * (1.0 + 1e-12), "ratio at most alpha");
    EvalReport rep;
    rep.problem = "osp";
    rep.algo = "static";
    rep.objective = "welfare";
    rep.mode = "exact";
    rep.expected = expected;
    rep.opt = opt;
    rep.ratio = ratio;
    rep.alpha = alpha;
    rep.pass = ratio <= alpha * (1.0 + 1e-12);
    r.reports.push_back(rep);
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.check(r.elapsed_seconds < 5.0, "runtime budget 5 s");
    r.details = "ratio=" + format_double(ratio) + " alpha=" + format_double(alpha);
    t.fold_into(r);
    return r;
}

// criterion 3
SuiteResult suite_osp_revenue(const CertifyConfig& cfg) {
    SuiteResult r;
    r.name = "osp_revenue";
    r.criterion = 3;
    Tally t;
    for (std::size_t c = 0; c < std::size(kOspConfigs); ++c) {
        const auto bounds = Bounds::of(1.0, kOspConfigs[c].theta);
        const int capacity = kOspConfigs[c].capacity;
        const PriceLaw law = osp::build_static_law(bounds);
        // all-buyers-at-U: every unit sells at the sampled price
        OspInstance all_u{capacity, bounds,
                          std::vector<double>(static_cast<std::size_t>(capacity), bounds.U)};
        const double expected = osp::exact_expected(all_u, law, Objective::revenue);
        const double closed_form = capacity * bounds.U / law.alpha();
        t.check(std::abs(expected - closed_form) <= 1e-10 * closed_form,
                "expected revenue equals C*U/alpha");
        for (int i = 0; i < 1000; ++i) {
            const auto inst = random_osp_instance(bounds, capacity, 200,
                                                  subseed(cfg.seed, 100 + c, static_cast<std::uint64_t>(i)),
                                                  i % 2 == 1);
            const double rev = osp::exact_expected(inst, law, Objective::revenue);
            const double opt = osp::offline_opt(inst).value;
            t.check(rev * law.alpha() >= opt * (1.0 - kRelTol),
                    "revenue bound at config " + std::to_string(c) + " i=" + std::to_string(i));
        }
    }
    r.details = "closed form C*U/alpha at 1e-10; revenue guarantee on the criterion-1 suite";
    t.fold_into(r);
    return r;
}

// criterion 4
SuiteResult suite_osp_dynamic(const CertifyConfig& cfg) {
    SuiteResult r;
    r.name = "osp_dynamic";
    r.criterion = 4;
    Tally t;
    for (std::size_t c = 0; c < std::size(kOspConfigs); ++c) {
        const auto bounds = Bounds::of(1.0, kOspConfigs[c].theta);
        const auto schedule = osp::build_dynamic_schedule(kOspConfigs[c].capacity, bounds);
        for (int i = 0; i < 1000; ++i) {
            const auto inst = random_osp_instance(bounds, kOspConfigs[c].capacity, 200,
                                                  subseed(cfg.seed, 100 + c, static_cast<std::uint64_t>(i)),
                                                  i % 2 == 1);
            const double welfare = osp::run_dynamic(inst, schedule).welfare;
            const double opt = osp::offline_opt(inst).value;
            t.check(welfare * schedule.alpha >= opt * (1.0 - kRelTol),
                    "dynamic bound at config " + std::to_string(c) + " i=" + std::to_string(i));
        }
    }
    for (double theta : {2.0, 10.0}) {
        double prev = std::numeric_limits<double>::infinity();
        for (int capacity : {1, 2, 5, 10, 100, 1000, 10000}) {
            const auto sol = solve_finite_supply_ratio(capacity, theta);
            t.check(sol.residual <= 1e-10, "solver residual at C=" + std::to_string(capacity));
            t.check(sol.alpha <= prev * (1.0 + 1e-12),
                    "alpha nonincreasing at C=" + std::to_string(capacity));
            prev = sol.alpha;
            if (capacity == 1)
                t.check(std::abs(sol.alpha - theta) <= 1e-10, "alpha(C=1) = theta");
            if (capacity == 10000) {
                const double gap = sol.alpha - (1.0 + std::log(theta));
                t.check(gap > 0.0 && gap <= 0.05, "alpha(1e4) gap in (0, 0.05]");
            }
        }
    }
    r.details = "replay bound on the criterion-1 suite; ladder-equation solver checks";
    t.fold_into(r);
    return r;
}

// criterion 5
SuiteResult suite_single_leg(const CertifyConfig& cfg) {
    SuiteResult r;
    r.name = "single_leg";
    r.criterion = 5;
    Tally t;
    for (int i = 0; i < 500; ++i) {
        SplitMix64 rng(subseed(cfg.seed, 500, static_cast<std::uint64_t>(i)));
        const int m = rng.range(1, 6);
        std::vector<double> levels(static_cast<std::size_t>(m));
        double level = rng.uniform(0.5, 2.0);
        for (int j = 0; j < m; ++j) {
            levels[static_cast<std::size_t>(j)] = level;
            level *= rng.uniform(1.2, 2.5);
        }
        const auto ladder = osp::build_single_leg_law(levels);
        double q_direct = 0.0;
        double prev = 0.0;
        for (double v : levels) {
            q_direct += 1.0 - prev / v;
            prev = v;
        }
        t.check(std::abs(ladder.ratio - q_direct) <= 1e-12, "q identity at i=" + std::to_string(i));

        OspInstance inst{rng.range(1, 5), Bounds::of(levels.front(), levels.back()), {}};
        const int buyers = rng.range(1, 40);
        for (int b = 0; b < buyers; ++b)
            inst.valuations.push_back(levels[rng.below(static_cast<std::uint64_t>(m))]);
        const double rev = osp::exact_expected(inst, ladder.law, Objective::revenue);
        const double opt = osp::offline_opt(inst).value;
        t.check(rev * ladder.ratio >= opt * (1.0 - kRelTol),
                "single-leg revenue bound at i=" + std::to_string(i));
        if (m == 1) {
            t.check(opt <= 0.0 || std::abs(opt / rev - 1.0) <= 1e-12,
                    "m=1 ratio is exactly 1 at i=" + std::to_string(i));
        }
    }
    {
        // m=1 pinned: the ladder {U} always posts U
        const auto ladder = osp::build_single_leg_law({3.0});
        OspInstance inst{2, Bounds::of(3.0, 3.0), {3.0, 3.0, 3.0}};
        const double rev = osp::exact_expected(inst, ladder.law, Objective::revenue);
        t.check(std::abs(rev - 6.0) <= 1e-12, "m=1 pinned ratio 1");
    }
    r.details = "500 ladders (m <= 6): q identity 1e-12, revenue bound, m=1 exact";
    t.fold_into(r);
    return r;
}

OapInstance random_oap_instance(SplitMix64& rng, int max_items, int max_buyers, int max_capacity,
                                double max_theta) {
    OapInstance inst;
    const int k = rng.range(1, max_items);
    const int n = rng.range(1, max_buyers);
    for (int j = 0; j < k; ++j) {
        inst.capacities.push_back(rng.range(1, max_capacity));
        const double low = rng.uniform(0.5, 2.0);
        const double theta = 1.0 + rng.uniform(0.0, max_theta - 1.0);
        inst.bounds.push_back(Bounds::of(low, low * theta));
    }
    for (int b = 0; b < n; ++b) {
        std::vector<double> row(static_cast<std::size_t>(k), 0.0);
        for (int j = 0; j < k; ++j)
            if (rng.uniform() < 0.7)
                row[static_cast<std::size_t>(j)] =
                    rng.uniform(inst.bounds[static_cast<std::size_t>(j)].L,
                                inst.bounds[static_cast<std::size_t>(j)].U);
        inst.valuations.push_back(std::move(row));
    }
    return inst;
}

// criterion 6
SuiteResult suite_oap_static_mc(const CertifyConfig& cfg) {
    SuiteResult r;
    r.name = "oap_static_mc";
    r.criterion = 6;
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    const double e_const = std::exp(1.0);
    for (int i = 0; i < 200; ++i) {
        SplitMix64 rng(subseed(cfg.seed, 600, static_cast<std::uint64_t>(i)));
        const auto inst = random_oap_instance(rng, 4, 50, 10, e_const);
        const auto laws = oap::build_static_laws(inst);
        const auto stats = oap::mc_expected(inst, laws, Objective::welfare, cfg.mc_trials,
                                            subseed(cfg.seed, 601, static_cast<std::uint64_t>(i)));
        const double opt = oap::offline_opt(inst).value;
        const bool ok = opt <= laws.alpha * (stats.mean + cfg.mc_sigma_slack * stats.stderr_) *
                                   (1.0 + 1e-12);
        t.check(ok, "mc welfare bound at i=" + std::to_string(i), /*is_statistical=*/true);
        if (i < 3 || !ok) {
            EvalReport rep;
            rep.problem = "oap";
            rep.algo = "static";
            rep.objective = "welfare";
            rep.mode = "mc";
            rep.expected = stats.mean;
            rep.stderr_ = stats.stderr_;
            rep.opt = opt;
            rep.ratio = stats.mean > 0.0 ? opt / stats.mean : 1.0;
            rep.alpha = laws.alpha;
            rep.trials = cfg.mc_trials;
            rep.seed = subseed(cfg.seed, 601, static_cast<std::uint64_t>(i));
            rep.pass = ok;
            r.reports.push_back(rep);
        }
    }
    // K=1 agrees with the one-dimensional exact evaluator
    for (int i = 0; i < 5; ++i) {
        SplitMix64 rng(subseed(cfg.seed, 602, static_cast<std::uint64_t>(i)));
        const auto inst = random_oap_instance(rng, 1, 30, 6, e_const);
        const auto laws = oap::build_static_laws(inst);
        const auto stats = oap::mc_expected(inst, laws, Objective::welfare, cfg.mc_trials,
                                            subseed(cfg.seed, 603, static_cast<std::uint64_t>(i)));
        OspInstance flat{inst.capacities[0], inst.bounds[0], {}};
        for (const auto& row : inst.valuations)
            if (row[0] > 0.0) flat.valuations.push_back(row[0]);
        const double exact = osp::exact_expected(flat, laws.items[0].law, Objective::welfare);
        t.check(std::abs(stats.mean - exact) <=
                    cfg.mc_sigma_slack * std::max(stats.stderr_, 1e-15) + 1e-12,
                "K=1 cross-oracle at i=" + std::to_string(i), /*is_statistical=*/true);
    }
    // law continuity and solver residuals over a log grid of theta
    for (int g = 0; g <= 60; ++g) {
        const double log_theta =
            std::log(1.0 + 1e-6) + (std::log(1e3) - std::log(1.0 + 1e-6)) * g / 60.0;
        const double theta = std::exp(log_theta);
        const auto sol = solve_assignment_ratio(theta);
        t.check(sol.residual <= 1e-12, "omega residual at grid " + std::to_string(g));
        const double left = (sol.alpha - 1.0) / sol.alpha * std::exp(sol.omega);
        const double right = theta * std::exp(sol.alpha * (sol.omega - 1.0));
        t.check(std::abs(left - right) <= 1e-10,
                "law continuity at grid " + std::to_string(g));
    }
    for (double theta : {2.0, 100.0, 10000.0})
        t.check(solve_assignment_ratio(theta).residual <= 1e-12,
                "omega residual at theta=" + format_double(theta));
    t.check(std::abs(solve_assignment_ratio(1.0 + 1e-8).alpha - kEulerRatio) <= 1e-3,
            "theta->1 limit of alpha");
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.check(r.elapsed_seconds < 180.0, "runtime budget 180 s");
    r.details = "200 mc instances, K=1 cross-oracle, continuity/residual grids";
    t.fold_into(r);
    return r;
}

// criterion 7
SuiteResult suite_oap_offline_oracle(const CertifyConfig& cfg) {
    SuiteResult r;
    r.name = "oap_offline_oracle";
    r.criterion = 7;
    Tally t;
    for (int i = 0; i < 500; ++i) {
        SplitMix64 rng(subseed(cfg.seed, 700, static_cast<std::uint64_t>(i)));
        const auto inst = random_oap_instance(rng, 3, 8, 3, 4.0);
        const double flow = oap::offline_opt(inst).value;
        const double brute = oap::brute_force_opt(inst);
        t.check(flow == brute, "flow == brute force at i=" + std::to_string(i));
    }
    const struct { int items, capacity; double floor; } stage1[] = {
        {2, 1, 1.0}, {3, 2, 1.0}, {5, 3, 2.0}, {8, 2, 1.0}};
    for (const auto& s : stage1) {
        const auto inst = adversary::oap_two_stage(s.items, s.capacity,
                                                   Bounds::of(s.floor, s.floor * std::exp(1.0)), 1);
        const double opt = oap::offline_opt(inst).value;
        t.check(opt == s.floor * s.capacity * s.items,
                "upper-triangle OPT = L*C*K at K=" + std::to_string(s.items));
    }
    r.details = "500 random instances flow==brute; upper-triangle OPT exact";
    t.fold_into(r);
    return r;
}

OsccInstance random_oscc_instance(SplitMix64& rng, double theta, int max_capacity,
                                  int max_buyers, bool sorted) {
    const auto bounds = Bounds::of(1.0, theta);
    const int capacity = rng.range(1, max_capacity);
    std::vector<double> marginals(static_cast<std::size_t>(capacity));
    for (;;) {
        for (auto& m : marginals) m = rng.uniform(0.0, bounds.U);
        std::sort(marginals.begin(), marginals.end());
        if (marginals.front() < bounds.L) break;  // keeps profit(L) > 0
    }
    OsccInstance inst{ConvexCost::from_marginals(marginals), bounds, {}};
    const int n = rng.range(1, max_buyers);
    for (int b = 0; b < n; ++b) inst.valuations.push_back(rng.uniform(bounds.L, bounds.U));
    if (sorted) std::sort(inst.valuations.begin(), inst.valuations.end());
    return inst;
}

// criterion 8
SuiteResult suite_oscc_static(const CertifyConfig& cfg) {
    SuiteResult r;
    r.name = "oscc_static";
    r.criterion = 8;
    Tally t;
    for (int i = 0; i < 500; ++i) {
        SplitMix64 rng(subseed(cfg.seed, 800, static_cast<std::uint64_t>(i)));
        const auto inst = random_oscc_instance(rng, i % 2 == 0 ? 2.0 : 10.0, 20, 100, i % 4 == 3);
        const PriceLaw law = oscc::build_static_law(inst.cost, inst.bounds);
        const double expected = oscc::exact_expected(inst, law, Objective::welfare);
        const double opt = oscc::offline_opt(inst).value;
        t.check(expected * law.alpha() >= opt * (1.0 - kRelTol),
                "welfare bound at i=" + std::to_string(i));
        if (i < 2) r.reports.push_back(evaluate(AnyInstance{inst}, EvalRequest{}));
        if (i < 3) {
            // distribution identity on a 100-point grid
            const Conjugate conj(inst.cost);
            const double base = conj.value(inst.bounds.L).profit;
            bool grid_ok = true;
            for (int g = 0; g < 100; ++g) {
                const double v =
                    inst.bounds.L + (inst.bounds.U - inst.bounds.L) * g / 99.0;
                const double direct =
                    (1.0 + std::log(conj.value(v).profit / base)) / law.alpha();
                if (std::abs(law.cdf(v) - direct) > 1e-10) grid_ok = false;
            }
            t.check(grid_ok, "cdf identity grid at i=" + std::to_string(i));
            t.check(std::abs(law.cdf(inst.bounds.U) - 1.0) <= 1e-10, "cdf(U) = 1");
        }
    }
    // zero production cost reduces to the plain selection evaluator
    for (int i = 0; i < 20; ++i) {
        const auto bounds = Bounds::of(1.0, i % 2 == 0 ? 2.0 : 10.0);
        const auto base = random_osp_instance(bounds, 1 + i % 7, 60,
                                              subseed(cfg.seed, 801, static_cast<std::uint64_t>(i)),
                                              i % 2 == 1);
        OsccInstance zero{ConvexCost::zero(base.capacity), bounds, base.valuations};
        const PriceLaw oscc_law = oscc::build_static_law(zero.cost, zero.bounds);
        const PriceLaw osp_law = osp::build_static_law(bounds);
        const double a = oscc::exact_expected(zero, oscc_law, Objective::welfare);
        const double b = osp::exact_expected(base, osp_law, Objective::welfare);
        t.check(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)),
                "zero-cost reduction at i=" + std::to_string(i));
    }
    r.details = "500 random convex costs: welfare bound, cdf identity, zero-cost reduction";
    t.fold_into(r);
    return r;
}

// criterion 9
SuiteResult suite_oscc_deterministic_lb(const CertifyConfig&) {
    SuiteResult r;
    r.name = "oscc_deterministic_lb";
    r.criterion = 9;
    Tally t;
    const auto cost = ConvexCost::from_marginals({0.0, 1.0, 2.0});
    const auto bounds = Bounds::of(1.0, 3.0);
    const auto inst = adversary::oscc_batched_increasing(cost, bounds, 400, bounds.U);
    const Conjugate conj(cost);
    const double target = conj.value(bounds.U).profit / conj.value(bounds.L).profit;
    const double welfare = oscc::run_static(inst, bounds.L).welfare;
    const double opt = oscc::offline_opt(inst).value;
    const double ratio = opt / welfare;
    t.check(welfare * target >= opt * (1.0 - kRelTol), "floor-price bound direction");
    t.check(std::abs(ratio - target) <= 0.02 * target, "ratio within 2% of profit(U)/profit(L)");
    const struct { double unit_cost, low, high; int capacity; } linear[] = {
        {0.5, 1.0, 10.0, 7}, {0.25, 1.0, 2.0, 3}};
    for (const auto& lc : linear) {
        std::vector<double> marginals(static_cast<std::size_t>(lc.capacity), lc.unit_cost);
        const PriceLaw law = oscc::build_static_law(ConvexCost::from_marginals(marginals),
                                                    Bounds::of(lc.low, lc.high));
        const double formula =
            1.0 + std::log((lc.high - lc.unit_cost) / (lc.low - lc.unit_cost));
        t.check(std::abs(law.alpha() - formula) <= 1e-10,
                "linear-cost alpha formula at c=" + format_double(lc.unit_cost));
    }
    r.details = "ratio=" + format_double(ratio) + " target=" + format_double(target);
    t.fold_into(r);
    return r;
}

// criterion 10
SuiteResult suite_gstar_duality(const CertifyConfig&) {
    SuiteResult r;
    r.name = "gstar_duality";
    r.criterion = 10;
    Tally t;
    const auto bounds = Bounds::of(1.0, 10.0);
    const int capacity = 50;
    const PriceLaw law = osp::build_static_law(bounds);
    const double alpha = 1.0 + std::log(bounds.theta);
    bool grid_ok = true;
    double worst = 0.0;
    for (int g = 0; g <= 1000; ++g) {
        const double v = bounds.L + (bounds.U - bounds.L) * g / 1000.0;
        const double lhs = law.cdf(v) * capacity;
        const double rhs = required_sales(capacity, alpha, bounds.L, v);
        worst = std::max(worst, std::abs(lhs - rhs));
        if (std::abs(lhs - rhs) > 1e-12) grid_ok = false;
    }
    t.check(grid_ok, "cdf*C equals the required-sales curve on the grid");
    t.check(required_sales(capacity, alpha, bounds.L, bounds.U) == capacity,
            "required sales at U equal capacity exactly");
    r.details = "grid max |cdf*C - curve| = " + format_double(worst);
    t.fold_into(r);
    return r;
}

// criterion 11
SuiteResult suite_determinism(const CertifyConfig& cfg) {
    SuiteResult r;
    r.name = "determinism";
    r.criterion = 11;
    Tally t;
    CertifyConfig sub = cfg;
    sub.suites = {"single_leg", "oscc_deterministic_lb", "gstar_duality"};
    const auto once = run_certification(sub);
    const auto twice = run_certification(sub);
    t.check(summary_csv(once) == summary_csv(twice), "summary bytes identical");
    // an MC estimate must not depend on the thread cap
    SplitMix64 rng(subseed(cfg.seed, 1100, 0));
    const auto inst = random_oap_instance(rng, 3, 25, 5, std::exp(1.0));
    const auto laws = oap::build_static_laws(inst);
    std::string saved = std::getenv("PRICING_LAB_THREADS") ? std::getenv("PRICING_LAB_THREADS") : "";
    const bool had = std::getenv("PRICING_LAB_THREADS") != nullptr;
    ::setenv("PRICING_LAB_THREADS", "1", 1);
    const auto st1 = oap::mc_expected(inst, laws, Objective::welfare, 20000, cfg.seed);
    ::setenv("PRICING_LAB_THREADS", "3", 1);
    const auto st3 = oap::mc_expected(inst, laws, Objective::welfare, 20000, cfg.seed);
    if (had)
        ::setenv("PRICING_LAB_THREADS", saved.c_str(), 1);
    else
        ::unsetenv("PRICING_LAB_THREADS");
    t.check(st1.mean == st3.mean && st1.stderr_ == st3.stderr_,
            "mc estimate identical across thread caps");
    r.details = "double-run summary byte compare; thread-cap invariance";
    t.fold_into(r);
    return r;
}

using SuiteFn = SuiteResult (*)(const CertifyConfig&);

const std::pair<const char*, SuiteFn> kSuites[] = {
    {"osp_static_welfare", suite_osp_static_welfare},
    {"osp_tightness", suite_osp_tightness},
    {"osp_revenue", suite_osp_revenue},
    {"osp_dynamic", suite_osp_dynamic},
    {"single_leg", suite_single_leg},
    {"oap_static_mc", suite_oap_static_mc},
    {"oap_offline_oracle", suite_oap_offline_oracle},
    {"oscc_static", suite_oscc_static},
    {"oscc_deterministic_lb", suite_oscc_deterministic_lb},
    {"gstar_duality", suite_gstar_duality},
    {"determinism", suite_determinism},
};

}  // namespace

CertifyConfig CertifyConfig::from_json(const nlohmann::json& doc) {
    CertifyConfig cfg;
    if (doc.contains("suites")) cfg.suites = doc.at("suites").get<std::vector<std::string>>();
    if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("mc_trials")) cfg.mc_trials = doc.at("mc_trials").get<std::uint64_t>();
    if (doc.contains("mc_sigma_slack"))
        cfg.mc_sigma_slack = doc.at("mc_sigma_slack").get<double>();
    for (const auto& s : cfg.suites) {
        const bool known = std::any_of(std::begin(kSuites), std::end(kSuites),
                                       [&](const auto& p) { return s == p.first; });
        if (!known) throw std::invalid_argument("certify config: unknown suite " + s);
    }
    return cfg;
}

std::vector<std::string> certification_suites() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : kSuites) names.emplace_back(name);
    return names;
}

std::vector<SuiteResult> run_certification(const CertifyConfig& config) {
    std::vector<SuiteResult> results;
    for (const auto& [name, fn] : kSuites) {
        if (!config.suites.empty() &&
            std::find(config.suites.begin(), config.suites.end(), name) == config.suites.end())
            continue;
        results.push_back(fn(config));
    }
    return results;
}

std::string summary_csv(const std::vector<SuiteResult>& results) {
    std::string out = "suite,criterion,checks,failures,statistical,pass\n";
    for (const auto& r : results) {
        out += r.name;
        out += ',';
        out += std::to_string(r.criterion);
        out += ',';
        out += std::to_string(r.checks);
        out += ',';
        out += std::to_string(r.failures);
        out += ',';
        out += r.statistical ? "true" : "false";
        out += ',';
        out += r.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

void write_bundle(const std::vector<SuiteResult>& results, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(out_dir) / "reports");
    {
        std::ofstream out(fs::path(out_dir) / "summary.csv", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write bundle summary: " + out_dir);
        out << summary_csv(results);
    }
    for (const auto& r : results) {
        std::ofstream out(fs::path(out_dir) / "reports" / (r.name + ".jsonl"), std::ios::binary);
        if (!out) throw std::runtime_error("cannot write bundle reports: " + out_dir);
        out << nlohmann::json{{"suite", r.name},
                              {"criterion", r.criterion},
                              {"checks", r.checks},
                              {"failures", r.failures},
                              {"statistical", r.statistical},
                              {"pass", r.pass},
                              {"details", r.details}}
                   .dump()
            << '\n';
        for (const auto& rep : r.reports) out << rep.to_jsonl() << '\n';
    }
}

}  // namespace plab
