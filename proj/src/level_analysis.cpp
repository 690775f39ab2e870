// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#include "accinfo/level_analysis.hpp"

#include <fmt/format.h>

#include "accinfo/channel.hpp"
#include "accinfo/error.hpp"

namespace accinfo {

LevelReport sweep_levels(const EventFrequencyTable& table, const CodeSchema& schema,
                         const std::string& period) {
  if (!(table.schema() == schema)) {
    throw Error(ErrorKind::SchemaMismatch,
                fmt::format("table schema {} differs from requested {}", table.schema().widths_text(),
                            schema.widths_text()));
  }
  LevelReport report;
  report.period = period;
  report.schema = schema;
  report.events = table.distinct_events();
  report.transactions = table.total();

  for (int level = schema.levels(); level >= 1; --level) {
    const auto channel = build_channel(table, Level(level));
    if (level == schema.levels()) report.h_x = entropy(channel.input());
    const MeasureSet m = measure_channel(channel);

    LevelRow row;
    row.level = level;
    row.s_observed = m.s;
    row.s_max = m.s_max;
    row.h_y = m.h_y;
    row.h_x_given_y = m.h_x_given_y;
    row.i_xy = m.i_xy;
    row.u_xy = m.u_xy;
    row.collapsed_labels = channel.collapsed_labels();
    row.degenerate = m.degenerate;
    report.levels.push_back(row);
  }
  return report;
}

ComparisonTable compare_periods(const std::vector<LevelReport>& reports) {
  if (reports.size() < 2) {
    throw Error(ErrorKind::TooFewPeriods,
                fmt::format("comparison needs at least 2 periods, got {}", reports.size()));
  }
  for (const auto& r : reports) {
    if (!(r.schema == reports.front().schema)) {
      throw Error(ErrorKind::SchemaMismatch,
                  fmt::format("period '{}' uses schema {}, period '{}' uses {}", r.period,
                              r.schema.widths_text(), reports.front().period,
                              reports.front().schema.widths_text()));
    }
  }

  ComparisonTable out;
  for (const auto& r : reports) {
    for (const auto& row : r.levels) out.points.push_back({r.period, row.level, "i_xy", row.i_xy});
    for (const auto& row : r.levels) out.points.push_back({r.period, row.level, "u_xy", row.u_xy});
  }
  for (std::size_t k = 0; k + 1 < reports.size(); ++k) {
    const auto& a = reports[k];
    const auto& b = reports[k + 1];
    // Same schema, so both hold the same levels in the same order.
    for (std::size_t l = 0; l < a.levels.size(); ++l) {
      const auto& ra = a.levels[l];
      const auto& rb = b.levels[l];
      out.deltas.push_back({a.period, b.period, ra.level, ra.h_x_given_y - rb.h_x_given_y,
                            ra.i_xy - rb.i_xy, ra.u_xy - rb.u_xy});
    }
  }
  return out;
}

std::uint64_t max_classifications(std::uint64_t n_accounts) {
  if (n_accounts < 2) {
    throw Error(ErrorKind::TooFewAccounts,
                fmt::format("{} account(s); a classification needs two", n_accounts));
  }
  return n_accounts * (n_accounts - 1);
}

}  // namespace accinfo
