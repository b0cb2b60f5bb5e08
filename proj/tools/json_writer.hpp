#pragma once

#include <iosfwd>

#include <json.hpp>

namespace menhir::cli {

/// Pretty-prints with two-space indentation. Floating-point numbers are
/// written with 17 significant digits so every double round-trips exactly.
void write_json(std::ostream& os, const nlohmann::ordered_json& value, int indent = 0);

}  // namespace menhir::cli
