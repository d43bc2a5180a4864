#include "hdus/jsonl.hpp"

#include <json.hpp>

#include "hdus/error.hpp"

namespace hdus {

namespace {

using nlohmann::json;

std::vector<std::string> string_array(const json& j, const char* field, std::size_t line) {
  if (!j.is_array()) throw FormatError(std::string(field) + " must be an array of strings", line);
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw FormatError(std::string(field) + " must contain only strings", line);
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

ParsedRecord parse_record_line(std::string_view text, std::size_t line) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what(), line);
  }
  if (!j.is_object()) throw FormatError("record line must be a JSON object", line);

  UtteranceRecord rec;
  if (!j.contains("id") || !j["id"].is_string()) {
    throw FormatError("record needs a string 'id'", line);
  }
  rec.id = j["id"].get<std::string>();
  if (!j.contains("tokens")) throw FormatError("record needs a 'tokens' array", line);
  rec.tokens = string_array(j["tokens"], "tokens", line);
  if (j.contains("constructions")) {
    rec.constructions = string_array(j["constructions"], "constructions", line);
  }
  if (j.contains("pos_labels")) {
    rec.pos_labels = string_array(j["pos_labels"], "pos_labels", line);
  }
  if (j.contains("roles")) {
    const json& roles = j["roles"];
    if (!roles.is_array()) throw FormatError("roles must be an array of [role, head] pairs", line);
    for (const auto& pair : roles) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        throw FormatError("each role must be a [role, head] pair of strings", line);
      }
      rec.roles.push_back(RoleAssignment{pair[0].get<std::string>(), pair[1].get<std::string>()});
    }
  }

  try {
    rec.validate();
  } catch (const RecordError& e) {
    throw FormatError(e.what(), line);
  }
  return ParsedRecord{std::move(rec), std::string(text), line};
}

std::vector<ParsedRecord> read_records(std::istream& in) {
  std::vector<ParsedRecord> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_record_line(text, line));
  }
  return out;
}

std::string to_json_line(const UtteranceRecord& rec) {
  json j;
  j["id"] = rec.id;
  j["tokens"] = rec.tokens;
  if (!rec.constructions.empty()) j["constructions"] = rec.constructions;
  if (!rec.roles.empty()) {
    json roles = json::array();
    for (const RoleAssignment& r : rec.roles) roles.push_back({r.role, r.head});
    j["roles"] = std::move(roles);
  }
  if (!rec.pos_labels.empty()) j["pos_labels"] = rec.pos_labels;
  return j.dump();
}

}  // namespace hdus
