// Command-line front end: posted-price laws, single runs, exact/MC
// expectations, adversarial instance generation, ratio sweeps, and the
// certification suite. Exit codes: 0 ok, 1 bound violation / failed
// certification, 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plab/adversary.hpp"
#include "plab/certify.hpp"
#include "plab/evaluate.hpp"
#include "plab/io.hpp"
#include "plab/oap.hpp"
#include "plab/oscc.hpp"
#include "plab/osp.hpp"
#include "plab/sweep.hpp"

namespace {

using nlohmann::json;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

plab::Objective parse_objective(const std::string& name) {
    if (name == "welfare") return plab::Objective::welfare;
    if (name == "revenue") return plab::Objective::revenue;
    throw CLI::ValidationError("--objective must be welfare or revenue");
}

json law_to_json(const plab::PriceLaw& law) {
    json segments = json::array();
    for (const auto& s : law.segments()) {
        json seg{{"x_lo", s.x_lo}, {"x_hi", s.x_hi}};
        if (const auto* c = std::get_if<plab::Segment::Constant>(&s.form)) {
            seg["kind"] = "constant";
            seg["price"] = c->price;
        } else if (const auto* e = std::get_if<plab::Segment::ScaledExp>(&s.form)) {
            seg["kind"] = "scaled_exp";
            seg["scale"] = e->scale;
            seg["rate"] = e->rate;
        } else {
            const auto& cc = std::get<plab::Segment::ConjugateCurve>(s.form);
            seg["kind"] = "conjugate_curve";
            seg["base"] = cc.base;
            seg["alpha"] = cc.alpha;
        }
        segments.push_back(seg);
    }
    return json{{"alpha", law.alpha()},
                {"top_price", law.top_price()},
                {"bottom_price", law.bottom_price()},
                {"expected_price", law.expected_price()},
                {"segments", segments}};
}

json outcome_to_json(const plab::Outcome& out) {
    return json{{"welfare", out.welfare},
                {"revenue", out.revenue},
                {"utility", out.utility},
                {"units_sold", out.units_sold},
                {"decisions", out.purchased_item}};
}

struct PriceArgs {
    std::string problem = "osp";
    std::string algo = "static";
    double low = 1.0;
    double high = 1.0;
    int capacity = 1;
    std::vector<double> cost;
    std::vector<double> levels;
    std::optional<double> at;
    std::string out;
};

int cmd_price(const PriceArgs& a) {
    json doc;
    if (a.problem == "osp" && a.algo == "dynamic") {
        const auto schedule = plab::osp::build_dynamic_schedule(a.capacity, plab::Bounds::of(a.low, a.high));
        doc = json{{"problem", a.problem},
                   {"algo", "dynamic"},
                   {"alpha", schedule.alpha},
                   {"low_price_units", schedule.low_price_units},
                   {"prices", schedule.prices}};
    } else {
        plab::PriceLaw law = [&] {
            if (a.problem == "osp") return plab::osp::build_static_law(plab::Bounds::of(a.low, a.high));
            if (a.problem == "oscc") {
                if (a.cost.empty())
                    throw CLI::ValidationError("--cost is required for --problem oscc");
                return plab::oscc::build_static_law(plab::ConvexCost::from_cumulative(a.cost),
                                                    plab::Bounds::of(a.low, a.high));
            }
            if (a.problem == "single-leg") {
                if (a.levels.empty())
                    throw CLI::ValidationError("--levels is required for --problem single-leg");
                return plab::osp::build_single_leg_law(a.levels).law;
            }
            throw CLI::ValidationError("price supports --problem osp|oscc|single-leg");
        }();
        doc = law_to_json(law);
        doc["problem"] = a.problem;
        doc["algo"] = "static";
        if (a.at) {
            doc["x"] = *a.at;
            doc["price_at_x"] = law.price(*a.at);
        }
    }
    write_text(a.out, doc.dump(2) + "\n");
    return 0;
}

void check_problem_tag(const std::string& expected, const plab::AnyInstance& inst) {
    if (!expected.empty() && expected != plab::problem_tag(inst))
        throw std::runtime_error("--problem " + expected + " does not match instance tag " +
                                 plab::problem_tag(inst));
}

struct RunArgs {
    std::string instance;
    std::string problem;
    std::string algo = "static";
    std::optional<double> price;
    std::optional<double> quantile;
    std::vector<double> levels;
    std::string out;
};

int cmd_run(const RunArgs& a) {
    const auto inst = plab::load_instance(a.instance);
    check_problem_tag(a.problem, inst);
    plab::Outcome outcome;
    if (const auto* osp_inst = std::get_if<plab::OspInstance>(&inst)) {
        if (a.algo == "dynamic") {
            outcome = plab::osp::run_dynamic(
                *osp_inst, plab::osp::build_dynamic_schedule(osp_inst->capacity, osp_inst->bounds));
        } else {
            double price = 0.0;
            if (a.price) {
                price = *a.price;
            } else {
                const double x = a.quantile.value_or(0.5);
                if (a.algo == "single-leg") {
                    auto ladder = a.levels;
                    if (ladder.empty())
                        for (double v : std::set<double>(osp_inst->valuations.begin(),
                                                         osp_inst->valuations.end()))
                            ladder.push_back(v);
                    price = plab::osp::build_single_leg_law(ladder).law.price(x);
                } else {
                    price = plab::osp::build_static_law(osp_inst->bounds).price(x);
                }
            }
            outcome = plab::osp::run_static(*osp_inst, price);
        }
    } else if (const auto* oap_inst = std::get_if<plab::OapInstance>(&inst)) {
        if (a.algo == "dynamic") {
            outcome = plab::oap::run_dynamic(*oap_inst, plab::oap::build_dynamic_pricer(*oap_inst));
        } else {
            const auto laws = plab::oap::build_static_laws(*oap_inst);
            const double x = a.quantile.value_or(0.5);
            std::vector<double> prices;
            prices.reserve(laws.items.size());
            for (const auto& item : laws.items) prices.push_back(item.law.price(x));
            if (a.price) prices.assign(laws.items.size(), *a.price);
            outcome = plab::oap::run_static(*oap_inst, prices);
        }
    } else {
        const auto& oscc_inst = std::get<plab::OsccInstance>(inst);
        double price = a.price.value_or(0.0);
        if (!a.price) {
            const double x = a.quantile.value_or(0.5);
            price = plab::oscc::build_static_law(oscc_inst.cost, oscc_inst.bounds).price(x);
        }
        outcome = plab::oscc::run_static(oscc_inst, price);
    }
    write_text(a.out, outcome_to_json(outcome).dump(2) + "\n");
    return 0;
}

struct ExpectArgs {
    std::string instance;
    std::string problem;
    plab::EvalRequest request;
    std::string objective = "welfare";
    std::string out;
};

int cmd_expect(ExpectArgs a) {
    a.request.objective = parse_objective(a.objective);
    const auto inst = plab::load_instance(a.instance);
    check_problem_tag(a.problem, inst);
    const auto report = plab::evaluate(inst, a.request);
    write_text(a.out, report.to_jsonl() + "\n");
    return report.pass ? 0 : 1;
}

struct AdversaryArgs {
    std::string family;
    int capacity = 1;
    int items = 2;
    double low = 1.0;
    double high = 1.0;
    int levels = 2;
    std::optional<double> top;
    std::vector<double> ladder;
    std::vector<double> cost;
    int upto = -1;
    std::string out;
};

int cmd_adversary(const AdversaryArgs& a) {
    const auto bounds = plab::Bounds::of(a.low, a.high);
    plab::AnyInstance inst = [&]() -> plab::AnyInstance {
        if (a.family == "batched")
            return plab::adversary::osp_batched_increasing(a.capacity, bounds, a.levels,
                                                           a.top.value_or(bounds.U));
        if (a.family == "static-worst")
            return plab::adversary::osp_static_worst_case(a.capacity, bounds);
        if (a.family == "two-stage")
            return plab::adversary::oap_two_stage(a.items, a.capacity, bounds, a.levels);
        if (a.family == "oscc-batched") {
            if (a.cost.empty())
                throw CLI::ValidationError("--cost is required for --family oscc-batched");
            return plab::adversary::oscc_batched_increasing(
                plab::ConvexCost::from_cumulative(a.cost), bounds, a.levels,
                a.top.value_or(bounds.U));
        }
        if (a.family == "single-leg") {
            if (a.ladder.empty())
                throw CLI::ValidationError("--ladder is required for --family single-leg");
            return plab::adversary::single_leg_increasing(a.ladder, a.capacity, a.upto);
        }
        throw CLI::ValidationError(
            "--family must be batched|static-worst|two-stage|oscc-batched|single-leg");
    }();
    if (a.out.empty() || a.out == "-")
        std::cout << plab::instance_to_json(inst).dump(2) << "\n";
    else
        plab::save_instance(inst, a.out);
    return 0;
}

struct SweepArgs {
    std::vector<double> thetas{2.0, 10.0};
    std::vector<int> capacities{1, 5, 50};
    std::string out;
};

int cmd_sweep(const SweepArgs& a) {
    write_text(a.out, plab::sweep_csv(plab::ratio_table(a.thetas, a.capacities)));
    return 0;
}

struct CertifyArgs {
    std::string config;
    std::string out;
    bool quiet = false;
};

int cmd_certify(const CertifyArgs& a) {
    plab::CertifyConfig cfg;
    if (!a.config.empty()) {
        std::ifstream in(a.config);
        if (!in) throw std::runtime_error("cannot open config: " + a.config);
        json doc;
        in >> doc;
        cfg = plab::CertifyConfig::from_json(doc);
    }
    const auto results = plab::run_certification(cfg);
    if (!a.out.empty()) plab::write_bundle(results, a.out);
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        if (!a.quiet)
            std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.criterion << " ["
                      << r.name << "] " << r.details << "\n";
    }
    if (!a.quiet) std::cout << (all_pass ? "certification passed" : "certification FAILED") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Posted-price algorithms for online selection, assignment, and convex-cost "
                 "selling, with empirical competitive-ratio certification"};
    app.require_subcommand(1);

    PriceArgs price;
    auto* price_cmd = app.add_subcommand("price", "print a price law or dynamic ladder");
    price_cmd->add_option("--problem", price.problem, "osp|oscc|single-leg");
    price_cmd->add_option("--algo", price.algo, "static|dynamic");
    price_cmd->add_option("--L", price.low, "lowest valuation");
    price_cmd->add_option("--U", price.high, "highest valuation");
    price_cmd->add_option("--C", price.capacity, "units for sale");
    price_cmd->add_option("--cost", price.cost, "cumulative cost f(0..C)")->delimiter(',');
    price_cmd->add_option("--levels", price.levels, "single-leg price ladder")->delimiter(',');
    price_cmd->add_option("--x", price.at, "evaluate the law at this quantile");
    price_cmd->add_option("--out", price.out, "output file (default stdout)");

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "replay one algorithm on an instance");
    run_cmd->add_option("--instance", run.instance, "instance JSON file")->required();
    run_cmd->add_option("--problem", run.problem, "expected problem tag (validation only)");
    run_cmd->add_option("--algo", run.algo, "static|dynamic|single-leg");
    run_cmd->add_option("--price", run.price, "fixed posted price (static)");
    run_cmd->add_option("--x", run.quantile, "law quantile for the static price (default 0.5)");
    run_cmd->add_option("--levels", run.levels, "single-leg ladder")->delimiter(',');
    run_cmd->add_option("--out", run.out, "output file (default stdout)");

    ExpectArgs expect;
    auto* expect_cmd = app.add_subcommand("expect", "expected objective and ratio report");
    expect_cmd->add_option("--instance", expect.instance, "instance JSON file")->required();
    expect_cmd->add_option("--problem", expect.problem, "expected problem tag (validation only)");
    expect_cmd->add_option("--algo", expect.request.algo, "static|dynamic|single-leg");
    expect_cmd->add_option("--objective", expect.objective, "welfare|revenue");
    expect_cmd->add_option("--mode", expect.request.mode, "exact|mc");
    expect_cmd->add_option("--trials", expect.request.trials, "mc trials");
    expect_cmd->add_option("--seed", expect.request.seed, "mc seed");
    expect_cmd->add_option("--levels", expect.request.levels, "single-leg ladder")->delimiter(',');
    expect_cmd->add_option("--out", expect.out, "output file (default stdout)");

    AdversaryArgs adv;
    auto* adv_cmd = app.add_subcommand("adversary", "emit a hard instance as JSON");
    adv_cmd->add_option("--family", adv.family,
                        "batched|static-worst|two-stage|oscc-batched|single-leg")->required();
    adv_cmd->add_option("--C", adv.capacity, "batch size / per-item capacity");
    adv_cmd->add_option("--K", adv.items, "number of items (two-stage)");
    adv_cmd->add_option("--L", adv.low, "lowest valuation");
    adv_cmd->add_option("--U", adv.high, "highest valuation");
    adv_cmd->add_option("--m", adv.levels, "number of value levels");
    adv_cmd->add_option("--v", adv.top, "top value (default U)");
    adv_cmd->add_option("--ladder", adv.ladder, "single-leg ladder")->delimiter(',');
    adv_cmd->add_option("--cost", adv.cost, "cumulative cost f(0..C)")->delimiter(',');
    adv_cmd->add_option("--upto", adv.upto, "levels to include (single-leg; -1 = all)");
    adv_cmd->add_option("--out", adv.out, "output file (default stdout)");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "ratio constants as CSV");
    sweep_cmd->add_option("--theta", sweep.thetas, "theta values")->delimiter(',');
    sweep_cmd->add_option("--C", sweep.capacities, "capacities")->delimiter(',');
    sweep_cmd->add_option("--out", sweep.out, "output file (default stdout)");

    CertifyArgs certify;
    auto* certify_cmd = app.add_subcommand("certify", "run the certification suites");
    certify_cmd->add_option("--config", certify.config, "config JSON file");
    certify_cmd->add_option("--out", certify.out, "bundle directory");
    certify_cmd->add_flag("--quiet", certify.quiet, "suppress per-suite lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (price_cmd->parsed()) return cmd_price(price);
        if (run_cmd->parsed()) return cmd_run(run);
        if (expect_cmd->parsed()) return cmd_expect(expect);
        if (adv_cmd->parsed()) return cmd_adversary(adv);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep);
        if (certify_cmd->parsed()) return cmd_certify(certify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
