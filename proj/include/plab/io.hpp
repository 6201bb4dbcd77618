#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "plab/instance.hpp"

namespace plab {

using AnyInstance = std::variant<OspInstance, OapInstance, OsccInstance>;

nlohmann::json instance_to_json(const OspInstance& inst);
nlohmann::json instance_to_json(const OapInstance& inst);
nlohmann::json instance_to_json(const OsccInstance& inst);
nlohmann::json instance_to_json(const AnyInstance& inst);

/// Parses {"problem": "osp"|"oap"|"oscc", ...}. Errors carry `origin` plus
/// the 1-based line of the offending byte.
AnyInstance parse_instance(const std::string& text, const std::string& origin);

AnyInstance load_instance(const std::string& path);
void save_instance(const AnyInstance& inst, const std::string& path);

const char* problem_tag(const AnyInstance& inst);

}  // namespace plab
