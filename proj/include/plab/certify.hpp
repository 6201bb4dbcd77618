#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "plab/report.hpp"

namespace plab {

/// Knobs for the certification run. Tolerances of the individual criteria
/// are pinned in the suites themselves; only the statistical slack and the
/// Monte Carlo effort are configurable (a zero slack is the negative
/// control: MC suites must then fail and be flagged as statistical).
struct CertifyConfig {
    std::vector<std::string> suites;  // empty = all, in declaration order
    std::uint64_t seed = 20240601;
    std::uint64_t mc_trials = 100000;
    double mc_sigma_slack = 3.0;

    static CertifyConfig from_json(const nlohmann::json& doc);
};

struct SuiteResult {
    std::string name;
    int criterion = 0;
    bool pass = false;
    long checks = 0;
    long failures = 0;
    bool statistical = false;  // all failures are MC-statistical
    std::string details;       // deterministic; never contains wall-clock data
    std::vector<EvalReport> reports;
    double elapsed_seconds = 0.0;  // informational; excluded from the bundle
};

std::vector<std::string> certification_suites();

/// Runs the requested suites in declaration order.
std::vector<SuiteResult> run_certification(const CertifyConfig& config);

/// suite,criterion,checks,failures,statistical,pass — byte-identical across
/// runs with the same config.
std::string summary_csv(const std::vector<SuiteResult>& results);

/// Writes summary.csv plus reports/<suite>.jsonl under out_dir.
void write_bundle(const std::vector<SuiteResult>& results, const std::string& out_dir);

}  // namespace plab
