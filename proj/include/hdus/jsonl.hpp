#pragma once
// Line-delimited JSON input: one utterance record per line, UTF-8.
//
//   {"id":"u1","tokens":["I","am","afraid"],
//    "constructions":["present tense"],
//    "roles":[["subject","I"]],
//    "pos_labels":["PRP","VBP","JJ"]}
//
// tokens is required and non-empty; the other layers are optional.
// Unknown fields are ignored. Blank lines are skipped.

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "hdus/record.hpp"

namespace hdus {

struct ParsedRecord {
  UtteranceRecord record;
  std::string payload;  // the original line, stored verbatim
  std::size_t line = 0;  // 1-based input line
};

// Throws FormatError (with the line number) on malformed or invalid records.
ParsedRecord parse_record_line(std::string_view text, std::size_t line);
std::vector<ParsedRecord> read_records(std::istream& in);

std::string to_json_line(const UtteranceRecord& rec);

}  // namespace hdus
