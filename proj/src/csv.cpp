// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#include "csv.hpp"

#include <fmt/format.h>

#include "accinfo/error.hpp"

namespace accinfo::csv {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<Row> Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_ == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;

    Row row;
    row.line = line_;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field.push_back('"');
            ++i;
          } else {
            quoted = false;
          }
        } else {
          field.push_back(c);
        }
      } else if (c == '"' && trim(field).empty()) {
        quoted = true;
        was_quoted = true;
        field.clear();
      } else if (c == sep_) {
        row.fields.push_back(was_quoted ? field : trim(field));
        field.clear();
        was_quoted = false;
      } else {
        field.push_back(c);
      }
    }
    if (quoted) {
      throw Error(ErrorKind::CsvParseError,
                  fmt::format("row {}, column {}: unterminated quoted field", line_,
                              row.fields.size() + 1));
    }
    row.fields.push_back(was_quoted ? field : trim(field));
    return row;
  }
  return std::nullopt;
}

}  // namespace accinfo::csv
