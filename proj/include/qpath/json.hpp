#pragma once

#include <json.hpp>

#include "qpath/dispatch.hpp"

namespace qpath {

nlohmann::json to_json(const Path& p);
nlohmann::json to_json(const Covering& c);
nlohmann::json to_json(const Instance& inst);
nlohmann::json to_json(const Signature& s);
nlohmann::json to_json(const TraceNode& t);
nlohmann::json to_json(const SolveOutcome& o);

Path path_from_json(const nlohmann::json& j);
Covering covering_from_json(const nlohmann::json& j);
Instance instance_from_json(const nlohmann::json& j);
Signature signature_from_json(const nlohmann::json& j);

} // namespace qpath
