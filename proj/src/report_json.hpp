#pragma once

// JSON emission with fixed float formatting (17 significant digits) and
// insertion-ordered keys. Parsing goes through nlohmann::json directly.

#include <string>

#include "json.hpp"

namespace perdecomp::detail {

using JsonValue = nlohmann::ordered_json;

/// Compact when indent < 0. Arrays holding only scalars stay on one line.
std::string dump_json(const JsonValue& value, int indent = -1);

/// "%.17g"; non-finite values render as null.
std::string format_double(double v);

}  // namespace perdecomp::detail
