#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "covrough/covering.hpp"
#include "covrough/morphisms.hpp"

namespace covrough::io {

using nlohmann::json;

/// {"universe": [...], "covering": [[...], ...]} with members in canonical order.
[[nodiscard]] json to_json(const Covering& covering);
[[nodiscard]] json to_json(const Subset& subset);
/// {"map": {"x1": "y1", ...}}
[[nodiscard]] json to_json(const Mapping& f);

/// Shape errors raise ParseError; semantic problems (duplicate names, a
/// family that does not cover) raise their own codes.
[[nodiscard]] Covering covering_from_json(const json& j);
[[nodiscard]] Subset subset_from_json(const Universe& universe, const json& j);
[[nodiscard]] Mapping mapping_from_json(const Universe& source, const Universe& target,
                                        const json& j);

/// Reads and parses a JSON document. Throws ParseError on I/O or syntax problems.
[[nodiscard]] json read_json_file(const std::filesystem::path& path);

/// Comma-separated labels; the empty string is the empty set. Surrounding
/// blanks around each label are ignored.
[[nodiscard]] std::vector<std::string> split_labels(std::string_view csv);

}  // namespace covrough::io
