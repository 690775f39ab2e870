// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

// Serialisation of level reports, comparisons and single measure sets.
// All writers are deterministic: fixed key order, fixed number formatting.
// Human tables use three decimals; JSON and CSV carry shortest round-trip
// representations of the doubles.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "accinfo/level_analysis.hpp"
#include "accinfo/measures.hpp"

namespace accinfo {

using Json = nlohmann::ordered_json;

Json to_json(const LevelReport& report);
Json to_json(const ComparisonTable& table);
Json to_json(const MeasureSet& m);

std::string render_reports_table(const std::vector<LevelReport>& reports);
std::string render_reports_json(const std::vector<LevelReport>& reports);
/// period;level;s_observed;h_x;h_y;h_x_given_y;i_xy;u_xy
std::string render_reports_csv(const std::vector<LevelReport>& reports);

std::string render_comparison_table(const ComparisonTable& table);
std::string render_comparison_json(const ComparisonTable& table);
/// period;level;measure;value
std::string render_comparison_csv(const ComparisonTable& table);

std::string render_measures_table(const MeasureSet& m);
std::string render_measures_json(const MeasureSet& m);
std::string render_measures_csv(const MeasureSet& m);

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace accinfo
