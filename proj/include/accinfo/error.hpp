// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace accinfo {

enum class ErrorKind {
  InvalidSchema,
  MalformedCode,
  LevelOutOfRange,
  CsvParseError,
  DuplicateEventConflict,
  DuplicateAccountError,
  EmptyLedger,
  InvalidDistribution,
  DimensionMismatch,
  RowNotStochastic,
  ZeroOutputProbability,
  NegativeBeyondTolerance,
  CrossCheckFailure,
  SchemaMismatch,
  TooFewAccounts,
  TooFewPeriods,
  PeriodNotFound,
  Io,
  Usage,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. what() is prefixed with the kind
/// name so command-line output names the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

  /// True for failures that indicate a computation bug rather than bad input.
  bool is_internal() const noexcept {
    return kind_ == ErrorKind::CrossCheckFailure ||
           kind_ == ErrorKind::NegativeBeyondTolerance;
  }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace accinfo
