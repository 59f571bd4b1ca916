#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace bootperc::cli {

/// Human-readable view of a JSON document. Scalars print as "key  value",
/// arrays of scalars inline, arrays of objects as a table of their scalar
/// fields, nested objects indented.
std::string render_table(const nlohmann::json& doc);

}  // namespace bootperc::cli
