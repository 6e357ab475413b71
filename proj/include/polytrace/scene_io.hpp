// JSON serialization for scenes: regions, path segments, and suffix
// behavior, with all numbers kept exact.
#pragma once

#include <string>

#include "polytrace/trace_gen.hpp"

namespace polytrace {

/// Parses a scene from JSON text. Numbers must be integers or "num/den"
/// strings; floating-point literals are rejected unless `accept_floats`,
/// in which case each double converts to its exact binary rational.
/// Validates the schema, region ids, segment continuity, and (for cyclic
/// suffixes) loop closure. Throws input_error with a diagnostic.
scene parse_scene(const std::string& json_text, bool accept_floats = false);

/// Reads and parses a scene file. Throws input_error on I/O failure.
scene load_scene(const std::string& path, bool accept_floats = false);

/// Renders a scene as deterministic, human-readable JSON text. Writing the
/// same scene always produces byte-identical output.
std::string scene_to_json(const scene& sc);

/// Writes scene_to_json(sc) to a file. Throws input_error on I/O failure.
void save_scene(const scene& sc, const std::string& path);

}  // namespace polytrace
