// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

// Minimal ';'-separated reader shared by the ledger and channel loaders.
// Fields may be double-quoted ("" escapes a quote); records never span lines.

#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace accinfo::csv {

struct Row {
  std::size_t line = 0;  // 1-based physical line
  std::vector<std::string> fields;
};

class Reader {
 public:
  Reader(std::istream& in, char separator) : in_(in), sep_(separator) {}

  /// Next non-blank row, or nullopt at end of stream.
  std::optional<Row> next();

 private:
  std::istream& in_;
  char sep_;
  std::size_t line_ = 0;
};

std::string trim(std::string_view s);

}  // namespace accinfo::csv
