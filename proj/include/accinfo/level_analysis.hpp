// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "accinfo/coa.hpp"
#include "accinfo/ledger.hpp"
#include "accinfo/measures.hpp"

namespace accinfo {

struct LevelRow {
  int level = 0;
  std::size_t s_observed = 0;
  std::optional<std::uint64_t> s_max;
  double h_y = 0.0;
  double h_x_given_y = 0.0;
  double i_xy = 0.0;
  double u_xy = 0.0;
  /// Classifications whose debit and credit prefixes coincide at this level.
  std::size_t collapsed_labels = 0;
  bool degenerate = false;
};

struct Provenance {
  std::string input_digest;  // sha256 hex of the input bytes, when known
  std::string timestamp;     // empty unless set by the caller
};

struct LevelReport {
  std::string period;
  CodeSchema schema;
  double h_x = 0.0;
  std::size_t events = 0;              // R
  std::uint64_t transactions = 0;      // N_total
  std::vector<LevelRow> levels;        // finest first
  Provenance provenance;
};

/// One row per level, from the finest down to level 1.
LevelReport sweep_levels(const EventFrequencyTable& table, const CodeSchema& schema,
                         const std::string& period);

struct PlotPoint {
  std::string period;
  int level = 0;
  std::string measure;  // "i_xy" or "u_xy"
  double value = 0.0;
};

/// Differences between two consecutive periods at one level, computed as
/// value(earlier) - value(later).
struct LevelDelta {
  std::string from_period;
  std::string to_period;
  int level = 0;
  double d_h_x_given_y = 0.0;
  double d_i_xy = 0.0;
  double d_u_xy = 0.0;
};

struct ComparisonTable {
  std::vector<PlotPoint> points;
  std::vector<LevelDelta> deltas;
};

/// Long-format plot data plus per-level deltas between consecutive reports.
/// Throws TooFewPeriods for fewer than two reports and SchemaMismatch when the
/// schemas differ.
ComparisonTable compare_periods(const std::vector<LevelReport>& reports);

/// N_a (N_a - 1): ordered pairs of distinct accounts. Throws TooFewAccounts
/// below two accounts.
std::uint64_t max_classifications(std::uint64_t n_accounts);

}  // namespace accinfo
