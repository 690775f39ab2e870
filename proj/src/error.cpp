// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#include "accinfo/error.hpp"

namespace accinfo {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSchema: return "InvalidSchema";
    case ErrorKind::MalformedCode: return "MalformedCode";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::CsvParseError: return "CsvParseError";
    case ErrorKind::DuplicateEventConflict: return "DuplicateEventConflict";
    case ErrorKind::DuplicateAccountError: return "DuplicateAccountError";
    case ErrorKind::EmptyLedger: return "EmptyLedger";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RowNotStochastic: return "RowNotStochastic";
    case ErrorKind::ZeroOutputProbability: return "ZeroOutputProbability";
    case ErrorKind::NegativeBeyondTolerance: return "NegativeBeyondTolerance";
    case ErrorKind::CrossCheckFailure: return "CrossCheckFailure";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::TooFewAccounts: return "TooFewAccounts";
    case ErrorKind::TooFewPeriods: return "TooFewPeriods";
    case ErrorKind::PeriodNotFound: return "PeriodNotFound";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace accinfo
