#pragma once

#include "convexdiff/convex_set.hpp"
#include "convexdiff/rational.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace convexdiff {

// All JSON the library emits keeps insertion order, so serialized documents
// are byte-stable across runs.
using Json = nlohmann::ordered_json;

// {"elements": ["0", "1", "5/2", ...]} with every entry in canonical form.
Json set_to_json(const ConvexSet& set);

// Parses and validates; rejects missing/badly typed fields, non-canonical
// rationals, and element lists that are not convex.
ConvexSet set_from_json(const Json& doc);

ConvexSet read_set_file(const std::filesystem::path& path);
void write_set_file(const std::filesystem::path& path, const ConvexSet& set);

std::string read_text_file(const std::filesystem::path& path);
// Creates parent directories as needed.
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Emits a JSON number when the value fits in 64 bits, otherwise a decimal
// string, so arbitrarily large counts survive round trips exactly.
Json integer_to_json(const Integer& value);

// Accepts either encoding back.
Integer integer_from_json(const Json& value);

} // namespace convexdiff
