// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

// Hierarchical chart-of-accounts codes.
//
// A code such as 02.01.03.001.00006 is a sequence of fixed-width digit
// segments, one per level. Level 1 is the most aggregated (main accounts),
// the last level identifies a single account. Truncating a code to level k
// keeps its first k segments, so every prefix is itself a valid code.

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace accinfo {

class CodeSchema {
 public:
  /// Widths [2,2,2,3,5] with '.' as separator.
  CodeSchema();
  CodeSchema(std::vector<int> segment_widths, char separator = '.');

  static CodeSchema default_schema() { return CodeSchema(); }

  /// Parses a width list such as "2,2,2,3,5".
  static CodeSchema from_widths_text(std::string_view widths, char separator = '.');

  const std::vector<int>& segment_widths() const noexcept { return widths_; }
  char separator() const noexcept { return separator_; }
  int levels() const noexcept { return static_cast<int>(widths_.size()); }
  int width(int level) const { return widths_.at(static_cast<std::size_t>(level - 1)); }

  /// "2,2,2,3,5"
  std::string widths_text() const;

  friend bool operator==(const CodeSchema&, const CodeSchema&) = default;

 private:
  std::vector<int> widths_;
  char separator_;
};

/// Aggregation level, 1-based. Range against a particular schema is checked
/// where the level is used.
class Level {
 public:
  explicit Level(int value);
  int value() const noexcept { return value_; }
  friend auto operator<=>(const Level&, const Level&) = default;

 private:
  int value_;
};

/// A fully qualified code or any of its prefixes. Segments are kept as digit
/// strings so leading zeros survive.
class AccountCode {
 public:
  AccountCode() = default;
  /// Each segment must be a non-empty digit string.
  explicit AccountCode(std::vector<std::string> segments);

  const std::vector<std::string>& segments() const noexcept { return segments_; }
  int depth() const noexcept { return static_cast<int>(segments_.size()); }
  bool empty() const noexcept { return segments_.empty(); }

  /// Joins segments with the separator, no schema check.
  std::string text(char separator = '.') const;

  friend auto operator<=>(const AccountCode&, const AccountCode&) = default;
  friend bool operator==(const AccountCode&, const AccountCode&) = default;

 private:
  std::vector<std::string> segments_;
};

/// Parses a fully qualified code. Throws Error(MalformedCode) naming the
/// offending segment (1-based) on wrong arity, width or non-digit content.
AccountCode parse_account_code(std::string_view text, const CodeSchema& schema);

/// Keeps the first `level` segments. Throws Error(LevelOutOfRange) when the
/// code is shallower than the requested level.
AccountCode truncate_to_level(const AccountCode& code, Level level);

/// Canonical dotted form using the schema separator.
std::string format_code(const AccountCode& code, const CodeSchema& schema);

}  // namespace accinfo
