#include "plab/report.hpp"

namespace plab {

nlohmann::json EvalReport::to_json() const {
    return nlohmann::json{{"problem", problem}, {"algo", algo},       {"objective", objective},
                          {"mode", mode},       {"expected", expected}, {"stderr", stderr_},
                          {"opt", opt},         {"ratio", ratio},     {"alpha", alpha},
                          {"trials", trials},   {"seed", seed},       {"pass", pass}};
}

std::string EvalReport::to_jsonl() const { return to_json().dump(); }

}  // namespace plab
