#pragma once

#include <json.hpp>

#include "qfs/cartier.hpp"
#include "qfs/delsarte.hpp"

namespace qfs {

/// {"value": n, "cap": c} or {"value": "infinity", "cap": c}.
nlohmann::json to_json(const CappedIndex& v);
nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const DelsarteResult& r);
nlohmann::json to_json(const EInvariant& e);
nlohmann::json field_json(const Field& k);

} // namespace qfs
