#pragma once

#include <string>

#include "json.hpp"

namespace schema_check {

// Validates a JSON value against the subset of JSON Schema draft-07 the
// shipped schemas use: type, properties, required, additionalProperties
// (false), items, enum, minimum, maximum. Returns an empty string when the
// instance validates, otherwise a description of the first violation.
std::string validate(const nlohmann::json& instance,
                     const nlohmann::json& schema);

}  // namespace schema_check
