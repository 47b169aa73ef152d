#pragma once

#include <json.hpp>

#include "axcat/execution.hpp"

namespace axcat {

using Json = nlohmann::ordered_json;

// {"addresses": [...], "events": [{"id", "proc", "kind", "addr", "value"}],
//  "po": [[a, b], ...], "co": [...], "rf": [...]}
// Init events carry proc -1. Pair lists are in lexicographic order.
Json execution_to_json(const Execution& e);

// Throws UsageError on a structurally malformed document. The result is not
// validated; ill-formed executions round-trip unchanged.
Execution execution_from_json(const Json& j);

Json relation_to_json(const Relation& r);

}  // namespace axcat
