// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#include "accinfo/report.hpp"

#include <array>
#include <map>
#include <tuple>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "accinfo/error.hpp"

namespace accinfo {

namespace {

Json optional_count(const std::optional<std::uint64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string optional_text(const std::optional<std::uint64_t>& v) {
  return v ? fmt::format("{}", *v) : std::string("-");
}

}  // namespace

Json to_json(const LevelReport& report) {
  Json levels = Json::array();
  for (const auto& row : report.levels) {
    levels.push_back({{"level", row.level},
                      {"s_observed", row.s_observed},
                      {"s_max", optional_count(row.s_max)},
                      {"h_y", row.h_y},
                      {"h_x_given_y", row.h_x_given_y},
                      {"i_xy", row.i_xy},
                      {"u_xy", row.u_xy},
                      {"collapsed_labels", row.collapsed_labels},
                      {"degenerate", row.degenerate}});
  }
  return {{"period", report.period},
          {"schema",
           {{"widths", report.schema.segment_widths()},
            {"separator", std::string(1, report.schema.separator())}}},
          {"h_x", report.h_x},
          {"events", report.events},
          {"transactions", report.transactions},
          {"levels", std::move(levels)},
          {"provenance",
           {{"input_digest", report.provenance.input_digest.empty()
                                 ? Json(nullptr)
                                 : Json(report.provenance.input_digest)},
            {"timestamp", report.provenance.timestamp.empty() ? Json(nullptr)
                                                              : Json(report.provenance.timestamp)}}}};
}

Json to_json(const ComparisonTable& table) {
  Json points = Json::array();
  for (const auto& p : table.points) {
    points.push_back({{"period", p.period}, {"level", p.level}, {"measure", p.measure}, {"value", p.value}});
  }
  Json deltas = Json::array();
  for (const auto& d : table.deltas) {
    deltas.push_back({{"from", d.from_period},
                      {"to", d.to_period},
                      {"level", d.level},
                      {"d_h_x_given_y", d.d_h_x_given_y},
                      {"d_i_xy", d.d_i_xy},
                      {"d_u_xy", d.d_u_xy}});
  }
  return {{"points", std::move(points)}, {"deltas", std::move(deltas)}};
}

Json to_json(const MeasureSet& m) {
  return {{"r", m.r},         {"s", m.s},
          {"s_max", optional_count(m.s_max)},
          {"h_x", m.h_x},     {"h_y", m.h_y},
          {"h_xy", m.h_xy},   {"h_x_given_y", m.h_x_given_y},
          {"i_xy", m.i_xy},   {"u_xy", m.u_xy},
          {"degenerate", m.degenerate}};
}

std::string render_reports_table(const std::vector<LevelReport>& reports) {
  std::string out;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& r = reports[k];
    if (k) out += '\n';
    out += fmt::format("Period {}: R = {} events, N = {} transactions, H(X) = {:.3f} bits\n",
                       r.period, r.events, r.transactions, r.h_x);
    out += fmt::format("{:>5} {:>6} {:>8} {:>8} {:>8} {:>8}\n", "level", "S", "H(Y)", "H(X/Y)",
                       "I(X,Y)", "U(X,Y)");
    for (const auto& row : r.levels) {
      out += fmt::format("{:>5} {:>6} {:>8.3f} {:>8.3f} {:>8.3f} {:>8.3f}\n", row.level,
                         row.s_observed, row.h_y, row.h_x_given_y, row.i_xy, row.u_xy);
    }
    for (const auto& row : r.levels) {
      if (row.collapsed_labels) {
        out += fmt::format("note: level {} has {} classification(s) with identical debit and credit prefixes\n",
                           row.level, row.collapsed_labels);
      }
      if (row.degenerate) {
        out += fmt::format("note: level {} is degenerate (H(X) = H(Y) = 0), U set to 1\n", row.level);
      }
    }
  }
  return out;
}

std::string render_reports_json(const std::vector<LevelReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string render_reports_csv(const std::vector<LevelReport>& reports) {
  std::string out = "period;level;s_observed;h_x;h_y;h_x_given_y;i_xy;u_xy\n";
  for (const auto& r : reports) {
    for (const auto& row : r.levels) {
      out += fmt::format("{};{};{};{};{};{};{};{}\n", r.period, row.level, row.s_observed, r.h_x,
                         row.h_y, row.h_x_given_y, row.i_xy, row.u_xy);
    }
  }
  return out;
}

std::string render_comparison_table(const ComparisonTable& table) {
  // Index points by (period, level, measure) for the side-by-side layout.
  std::map<std::tuple<std::string, int, std::string>, double> value;
  for (const auto& p : table.points) value[{p.period, p.level, p.measure}] = p.value;

  std::string out;
  std::string current;
  for (const auto& d : table.deltas) {
    const std::string block = d.from_period + "\x1f" + d.to_period;
    if (block != current) {
      if (!current.empty()) out += '\n';
      current = block;
      out += fmt::format("{} vs {} (delta = {} - {})\n", d.from_period, d.to_period, d.from_period,
                         d.to_period);
      out += fmt::format("{:>5} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}\n", "level", "I(a)", "I(b)",
                         "dI", "U(a)", "U(b)", "dU");
    }
    out += fmt::format("{:>5} {:>8.3f} {:>8.3f} {:>8.3f} {:>8.3f} {:>8.3f} {:>8.3f}\n", d.level,
                       value[{d.from_period, d.level, "i_xy"}], value[{d.to_period, d.level, "i_xy"}],
                       d.d_i_xy, value[{d.from_period, d.level, "u_xy"}],
                       value[{d.to_period, d.level, "u_xy"}], d.d_u_xy);
  }
  return out;
}

std::string render_comparison_json(const ComparisonTable& table) {
  return to_json(table).dump(2) + "\n";
}

std::string render_comparison_csv(const ComparisonTable& table) {
  std::string out = "period;level;measure;value\n";
  for (const auto& p : table.points) {
    out += fmt::format("{};{};{};{}\n", p.period, p.level, p.measure, p.value);
  }
  return out;
}

std::string render_measures_table(const MeasureSet& m) {
  std::string out = fmt::format("{:>4} {:>4} {:>6} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}\n", "R", "S",
                                "S_max", "H(X)", "H(Y)", "H(X,Y)", "H(X/Y)", "I(X,Y)", "U(X,Y)");
  out += fmt::format("{:>4} {:>4} {:>6} {:>8.3f} {:>8.3f} {:>8.3f} {:>8.3f} {:>8.3f} {:>8.3f}\n", m.r,
                     m.s, optional_text(m.s_max), m.h_x, m.h_y, m.h_xy, m.h_x_given_y, m.i_xy, m.u_xy);
  if (m.degenerate) out += "note: degenerate channel (H(X) = H(Y) = 0), U set to 1\n";
  return out;
}

std::string render_measures_json(const MeasureSet& m) { return to_json(m).dump(2) + "\n"; }

std::string render_measures_csv(const MeasureSet& m) {
  return fmt::format("r;s;h_x;h_y;h_xy;h_x_given_y;i_xy;u_xy\n{};{};{};{};{};{};{};{}\n", m.r, m.s,
                     m.h_x, m.h_y, m.h_xy, m.h_x_given_y, m.i_xy, m.u_xy);
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::Io, "sha256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

}  // namespace accinfo
