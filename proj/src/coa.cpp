// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#include "accinfo/coa.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include <fmt/format.h>

#include "accinfo/error.hpp"

namespace accinfo {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

CodeSchema::CodeSchema() : widths_{2, 2, 2, 3, 5}, separator_('.') {}

CodeSchema::CodeSchema(std::vector<int> segment_widths, char separator)
    : widths_(std::move(segment_widths)), separator_(separator) {
  if (widths_.empty()) {
    throw Error(ErrorKind::InvalidSchema, "schema needs at least one segment");
  }
  for (std::size_t i = 0; i < widths_.size(); ++i) {
    if (widths_[i] < 1) {
      throw Error(ErrorKind::InvalidSchema,
                  fmt::format("segment {} has width {}, must be >= 1", i + 1, widths_[i]));
    }
  }
  if (separator_ >= '0' && separator_ <= '9') {
    throw Error(ErrorKind::InvalidSchema, "separator must not be a digit");
  }
}

CodeSchema CodeSchema::from_widths_text(std::string_view widths, char separator) {
  std::vector<int> parsed;
  for (auto piece : split(widths, ',')) {
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw Error(ErrorKind::InvalidSchema, fmt::format("bad segment width '{}'", piece));
    }
    parsed.push_back(value);
  }
  return CodeSchema(std::move(parsed), separator);
}

std::string CodeSchema::widths_text() const {
  return fmt::format("{}", fmt::join(widths_, ","));
}

Level::Level(int value) : value_(value) {
  if (value < 1) {
    throw Error(ErrorKind::LevelOutOfRange, fmt::format("level {} is below 1", value));
  }
}

AccountCode::AccountCode(std::vector<std::string> segments) : segments_(std::move(segments)) {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!all_digits(segments_[i])) {
      throw Error(ErrorKind::MalformedCode,
                  fmt::format("segment {} ('{}') is not a digit string", i + 1, segments_[i]));
    }
  }
}

std::string AccountCode::text(char separator) const {
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out.push_back(separator);
    out += segments_[i];
  }
  return out;
}

AccountCode parse_account_code(std::string_view text, const CodeSchema& schema) {
  const auto parts = split(text, schema.separator());
  if (static_cast<int>(parts.size()) != schema.levels()) {
    // First segment index that is missing or unexpected.
    const auto offending = std::min<std::size_t>(parts.size(), schema.segment_widths().size()) + 1;
    throw Error(ErrorKind::MalformedCode,
                fmt::format("'{}' segment {}: got {} segments, schema expects {}", text, offending,
                            parts.size(), schema.levels()));
  }
  std::vector<std::string> segments;
  segments.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int level = static_cast<int>(i) + 1;
    if (!all_digits(parts[i])) {
      throw Error(ErrorKind::MalformedCode,
                  fmt::format("'{}' segment {} ('{}') is not all digits", text, level, parts[i]));
    }
    if (static_cast<int>(parts[i].size()) != schema.width(level)) {
      throw Error(ErrorKind::MalformedCode,
                  fmt::format("'{}' segment {} ('{}') has width {}, schema expects {}", text, level,
                              parts[i], parts[i].size(), schema.width(level)));
    }
    segments.emplace_back(parts[i]);
  }
  return AccountCode(std::move(segments));
}

AccountCode truncate_to_level(const AccountCode& code, Level level) {
  if (level.value() > code.depth()) {
    throw Error(ErrorKind::LevelOutOfRange,
                fmt::format("level {} exceeds code depth {}", level.value(), code.depth()));
  }
  const auto& segs = code.segments();
  return AccountCode(std::vector<std::string>(segs.begin(), segs.begin() + level.value()));
}

std::string format_code(const AccountCode& code, const CodeSchema& schema) {
  return code.text(schema.separator());
}

}  // namespace accinfo
