#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "gframe/system.hpp"

namespace gframe {

// RS file schema:
//   {"d": int, "k": [int, ...], "blocks": [block, ...]}
// where each block is a list of k_i rows, each row a list of d entries
// [re, im].

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& where = "matrix");

nlohmann::json system_to_json(const ReconstructionSystem& v);

/// Throws ParseError naming the offending location (JSON path) on any schema
/// or shape violation.
ReconstructionSystem system_from_json(const nlohmann::json& j);

/// Serializes with sorted keys, no whitespace and doubles printed with 17
/// significant digits (round-trips every finite double). Non-finite numbers
/// are written as null.
std::string dump_deterministic(const nlohmann::json& j);

ReconstructionSystem read_system(const std::filesystem::path& path);
void write_system(const std::filesystem::path& path, const ReconstructionSystem& v);

/// Parses text as JSON, converting parser failures into ParseError with the
/// byte position.
nlohmann::json parse_json(const std::string& text, const std::string& source);

}  // namespace gframe
