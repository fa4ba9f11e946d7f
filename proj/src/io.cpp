#include "covrough/io.hpp"

#include <fstream>
#include <map>

namespace covrough::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<std::string> label_array(const json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) parse_error(std::string(what) + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

json to_json(const Covering& covering) {
  json members = json::array();
  for (const auto& m : covering.members()) members.push_back(m.members());
  return json{{"universe", covering.universe().names()}, {"covering", std::move(members)}};
}

json to_json(const Subset& subset) { return subset.members(); }

json to_json(const Mapping& f) {
  json table = json::object();
  for (std::size_t x = 0; x < f.table().size(); ++x) {
    table[f.source().name(x)] = f.target().name(f.table()[x]);
  }
  return json{{"map", std::move(table)}};
}

Covering covering_from_json(const json& j) {
  if (!j.is_object()) parse_error("space document must be an object");
  if (!j.contains("universe")) parse_error("missing \"universe\"");
  if (!j.contains("covering")) parse_error("missing \"covering\"");
  const Universe universe(label_array(j.at("universe"), "\"universe\""));
  const json& families = j.at("covering");
  if (!families.is_array()) parse_error("\"covering\" must be an array of arrays");
  std::vector<std::vector<std::string>> lists;
  for (const auto& f : families) lists.push_back(label_array(f, "covering member"));
  return make_covering(universe, lists);
}

Subset subset_from_json(const Universe& universe, const json& j) {
  return universe.subset(label_array(j, "subset"));
}

Mapping mapping_from_json(const Universe& source, const Universe& target, const json& j) {
  if (!j.is_object() || !j.contains("map") || !j.at("map").is_object()) {
    parse_error("mapping document must be {\"map\": {...}}");
  }
  std::map<std::string, std::string> pairs;
  for (const auto& [key, value] : j.at("map").items()) {
    if (!value.is_string()) parse_error("mapping values must be strings");
    pairs.emplace(key, value.get<std::string>());
  }
  return make_mapping(source, target, pairs);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

std::vector<std::string> split_labels(std::string_view csv) {
  std::vector<std::string> out;
  const auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(csv).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    const auto piece = trim(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start));
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace covrough::io
