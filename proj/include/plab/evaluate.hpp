#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plab/io.hpp"
#include "plab/outcome.hpp"
#include "plab/report.hpp"

namespace plab {

struct EvalRequest {
    std::string algo = "static";  // static | dynamic | single-leg
    Objective objective = Objective::welfare;
    std::string mode = "exact";  // exact | mc
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    /// single-leg ladder; empty = the instance's distinct sorted valuations
    std::vector<double> levels;
};

/// Dispatches one instance to the right algorithm/evaluator and grades the
/// result against its ratio bound (3-standard-error slack in mc mode).
/// Exact expectation for the assignment problem's static laws is refused:
/// its randomness is K-dimensional.
EvalReport evaluate(const AnyInstance& inst, const EvalRequest& req);

}  // namespace plab
