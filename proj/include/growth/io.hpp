#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "growth/geometry.hpp"
#include "growth/ops.hpp"
#include "growth/rect_partition.hpp"

namespace growth {

// ASCII grid: '#' occupied, '.' empty, top line holds the greatest y.
std::string shape_to_ascii(const Shape& s);
Shape shape_from_ascii(std::string_view text);

// Structured form: {"points": [[x,y],...], "normalized": bool, "name"?}.
// The normalized flag is written iff the shape is normalized; a true flag on
// input is validated, making normalize round-trips bit-exact.
nlohmann::json shape_to_json(const Shape& s, const std::optional<std::string>& name = {});
Shape shape_from_json(const nlohmann::json& j);

// Auto-detects JSON (leading '{') versus ASCII.
Shape shape_from_text(std::string_view text);

nlohmann::json op_to_json(const GrowthOp& op);
GrowthOp op_from_json(const nlohmann::json& j);

nlohmann::json constructor_to_json(const Constructor& c);
Constructor constructor_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const RectPartition& p);
RectPartition partition_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(std::span<const Shape> frames);
std::vector<Shape> trace_from_json(const nlohmann::json& j);

// Wraps nlohmann parse errors into ParseError with line/col diagnostics.
nlohmann::json parse_json(std::string_view text);

}  // namespace growth
