#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace plab {

/// One evaluation result. Serialized as a single JSON object with sorted
/// keys, so identical runs produce byte-identical lines.
struct EvalReport {
    std::string problem;
    std::string algo;
    std::string objective;
    std::string mode;  // "exact" (includes deterministic replays) or "mc"
    double expected = 0.0;
    double stderr_ = 0.0;  // 0 for exact mode
    double opt = 0.0;
    double ratio = 1.0;  // opt / expected; 1 when opt = 0
    double alpha = 1.0;  // the bound this run is judged against
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool pass = true;

    nlohmann::json to_json() const;
    std::string to_jsonl() const;
};

}  // namespace plab
