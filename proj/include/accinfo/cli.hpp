// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "accinfo/coa.hpp"

namespace accinfo::cli {

/// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

enum class InputKind { Ledger, FrequencyTable, ChannelMatrix };
enum class OutputFormat { Table, Json, Csv };

struct RunConfig {
  std::filesystem::path input;
  InputKind kind = InputKind::Ledger;
  CodeSchema schema;
  /// Periods to analyse, in output order. Empty means every period, sorted.
  std::vector<std::string> periods;
  /// Treat the whole input as one period named "all".
  bool pool_periods = false;
  OutputFormat format = OutputFormat::Table;
  std::optional<std::filesystem::path> output;
};

/// Each command returns the rendered output or throws accinfo::Error.
std::string cmd_analyze(const RunConfig& config);
std::string cmd_compare(const RunConfig& config);
std::string cmd_channel(const RunConfig& config);

/// Entry point behind main(). `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace accinfo::cli
