#include "plab/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "plab/oap.hpp"
#include "plab/oscc.hpp"
#include "plab/osp.hpp"

namespace plab {

namespace {

constexpr double kExactSlack = 1e-9;  // relative slack for exact-mode bounds

void finish(EvalReport& r, double sigma_slack) {
    if (r.opt <= 0.0) {
        r.ratio = 1.0;
        r.pass = true;
        return;
    }
    r.ratio = r.expected > 0.0 ? r.opt / r.expected : std::numeric_limits<double>::infinity();
    const double budget = r.alpha * (r.expected + sigma_slack * r.stderr_);
    r.pass = r.opt <= budget * (1.0 + kExactSlack);
}

std::vector<double> distinct_levels(const std::vector<double>& valuations) {
    std::set<double> s(valuations.begin(), valuations.end());
    return {s.begin(), s.end()};
}

EvalReport eval_osp(const OspInstance& inst, const EvalRequest& req) {
    inst.validate();
    EvalReport r;
    r.problem = "osp";
    r.algo = req.algo;
    r.objective = to_string(req.objective);
    r.opt = osp::offline_opt(inst).value;

    if (req.algo == "dynamic") {
        const auto schedule = osp::build_dynamic_schedule(inst.capacity, inst.bounds);
        r.mode = "exact";
        r.alpha = schedule.alpha;
        r.expected = osp::run_dynamic(inst, schedule).objective_value(req.objective);
        finish(r, 0.0);
        return r;
    }

    PriceLaw law = [&] {
        if (req.algo == "single-leg") {
            const auto ladder = req.levels.empty() ? distinct_levels(inst.valuations) : req.levels;
            return osp::build_single_leg_law(ladder).law;
        }
        if (req.algo != "static")
            throw std::invalid_argument("evaluate: unknown algo " + req.algo);
        return osp::build_static_law(inst.bounds);
    }();
    r.alpha = law.alpha();
    if (req.mode == "exact") {
        r.mode = "exact";
        r.expected = osp::exact_expected(inst, law, req.objective);
        finish(r, 0.0);
    } else if (req.mode == "mc") {
        r.mode = "mc";
        r.trials = req.trials;
        r.seed = req.seed;
        const auto stats = osp::mc_expected(inst, law, req.objective, req.trials, req.seed);
        r.expected = stats.mean;
        r.stderr_ = stats.stderr_;
        finish(r, 3.0);
    } else {
        throw std::invalid_argument("evaluate: unknown mode " + req.mode);
    }
    return r;
}

EvalReport eval_oap(const OapInstance& inst, const EvalRequest& req) {
    inst.validate();
    EvalReport r;
    r.problem = "oap";
    r.algo = req.algo;
    r.objective = to_string(req.objective);
    r.opt = oap::offline_opt(inst).value;

    if (req.algo == "dynamic") {
        const auto pricer = oap::build_dynamic_pricer(inst);
        r.mode = "exact";
        r.alpha = pricer.alpha();
        r.expected = oap::run_dynamic(inst, pricer).objective_value(req.objective);
        finish(r, 0.0);
        return r;
    }
    if (req.algo != "static")
        throw std::invalid_argument("evaluate: unknown algo for oap: " + req.algo);
    if (req.mode == "exact")
        throw std::invalid_argument(
            "evaluate: exact expectation is unsupported for oap static laws "
            "(randomness is K-dimensional); use --mode mc");
    if (req.mode != "mc") throw std::invalid_argument("evaluate: unknown mode " + req.mode);

    const auto laws = oap::build_static_laws(inst);
    r.mode = "mc";
    r.alpha = laws.alpha;
    r.trials = req.trials;
    r.seed = req.seed;
    const auto stats = oap::mc_expected(inst, laws, req.objective, req.trials, req.seed);
    r.expected = stats.mean;
    r.stderr_ = stats.stderr_;
    finish(r, 3.0);
    return r;
}

EvalReport eval_oscc(const OsccInstance& inst, const EvalRequest& req) {
    inst.validate();
    if (req.algo != "static")
        throw std::invalid_argument("evaluate: oscc supports only --algo static");
    EvalReport r;
    r.problem = "oscc";
    r.algo = req.algo;
    r.objective = to_string(req.objective);
    r.opt = oscc::offline_opt(inst).value;

    const PriceLaw law = oscc::build_static_law(inst.cost, inst.bounds);
    r.alpha = law.alpha();
    if (req.mode == "exact") {
        r.mode = "exact";
        r.expected = oscc::exact_expected(inst, law, req.objective);
        finish(r, 0.0);
    } else if (req.mode == "mc") {
        r.mode = "mc";
        r.trials = req.trials;
        r.seed = req.seed;
        const auto stats = oscc::mc_expected(inst, law, req.objective, req.trials, req.seed);
        r.expected = stats.mean;
        r.stderr_ = stats.stderr_;
        finish(r, 3.0);
    } else {
        throw std::invalid_argument("evaluate: unknown mode " + req.mode);
    }
    return r;
}

}  // namespace

EvalReport evaluate(const AnyInstance& inst, const EvalRequest& req) {
    if (const auto* osp_inst = std::get_if<OspInstance>(&inst)) return eval_osp(*osp_inst, req);
    if (const auto* oap_inst = std::get_if<OapInstance>(&inst)) return eval_oap(*oap_inst, req);
    return eval_oscc(std::get<OsccInstance>(inst), req);
}

}  // namespace plab
