// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#include "accinfo/ledger.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <unordered_map>
#include <utility>

#include <fmt/format.h>

#include "accinfo/error.hpp"
#include "csv.hpp"

namespace accinfo {

namespace {

constexpr std::array<std::string_view, 6> kColumns = {
    "event_id", "description", "debit_code", "credit_code", "period", "count"};

std::size_t check_header(const csv::Row& header, InputShape shape) {
  const std::size_t n = header.fields.size();
  const std::size_t min_cols = shape == InputShape::FrequencyTable ? 6 : 5;
  if (n < min_cols || n > kColumns.size()) {
    throw Error(ErrorKind::CsvParseError,
                fmt::format("row {}: header has {} columns, expected {}", header.line, n,
                            fmt::join(kColumns.begin(), kColumns.begin() + min_cols, ";")));
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (header.fields[c] != kColumns[c]) {
      throw Error(ErrorKind::CsvParseError,
                  fmt::format("row {}, column {}: header '{}' where '{}' expected", header.line,
                              c + 1, header.fields[c], kColumns[c]));
    }
  }
  return n;
}

AccountCode parse_code_field(const csv::Row& row, std::size_t column, const CodeSchema& schema) {
  try {
    return parse_account_code(row.fields[column], schema);
  } catch (const Error& e) {
    throw Error(e.kind(), fmt::format("row {}, column {}: {}", row.line, kColumns[column], e.detail()));
  }
}

std::uint64_t parse_count(const csv::Row& row, std::size_t column) {
  const std::string& text = row.fields[column];
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw Error(ErrorKind::CsvParseError,
                fmt::format("row {}, column count: '{}' is not a positive integer", row.line, text));
  }
  return value;
}

}  // namespace

Ledger load_ledger_csv(std::istream& source, const CodeSchema& schema, InputShape shape) {
  csv::Reader reader(source, ';');
  Ledger ledger{{}, schema};

  const auto header = reader.next();
  if (!header) {
    throw Error(ErrorKind::CsvParseError, "row 1: missing header");
  }
  const std::size_t columns = check_header(*header, shape);

  std::unordered_map<std::string, std::pair<AccountCode, AccountCode>> seen;
  while (auto row = reader.next()) {
    if (row->fields.size() != columns) {
      throw Error(ErrorKind::CsvParseError, fmt::format("row {}: {} fields, header declares {}",
                                                        row->line, row->fields.size(), columns));
    }
    TransactionRecord rec;
    rec.event_id = row->fields[0];
    if (rec.event_id.empty()) {
      throw Error(ErrorKind::CsvParseError, fmt::format("row {}, column event_id: empty", row->line));
    }
    rec.description = row->fields[1];
    rec.debit_code = parse_code_field(*row, 2, schema);
    rec.credit_code = parse_code_field(*row, 3, schema);
    rec.period_tag = row->fields[4];
    if (columns == 6 && (shape == InputShape::FrequencyTable || !row->fields[5].empty())) {
      rec.count = parse_count(*row, 5);
    }

    if (rec.debit_code == rec.credit_code) {
      throw Error(ErrorKind::DuplicateAccountError,
                  fmt::format("row {}: event '{}' debits and credits the same account {}", row->line,
                              rec.event_id, format_code(rec.debit_code, schema)));
    }
    const auto [it, inserted] =
        seen.try_emplace(rec.event_id, rec.debit_code, rec.credit_code);
    if (!inserted && (it->second.first != rec.debit_code || it->second.second != rec.credit_code)) {
      throw Error(ErrorKind::DuplicateEventConflict,
                  fmt::format("row {}: event '{}' classified as {} / {}, earlier as {} / {}",
                              row->line, rec.event_id, format_code(rec.debit_code, schema),
                              format_code(rec.credit_code, schema),
                              format_code(it->second.first, schema),
                              format_code(it->second.second, schema)));
    }
    ledger.records.push_back(std::move(rec));
  }
  return ledger;
}

Ledger load_ledger_file(const std::filesystem::path& path, const CodeSchema& schema,
                        InputShape shape) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, fmt::format("cannot open '{}'", path.string()));
  }
  return load_ledger_csv(in, schema, shape);
}

std::map<std::string, Ledger> split_periods(const Ledger& ledger) {
  std::map<std::string, Ledger> parts;
  for (const auto& rec : ledger.records) {
    auto [it, inserted] = parts.try_emplace(rec.period_tag, Ledger{{}, ledger.schema});
    it->second.records.push_back(rec);
  }
  return parts;
}

EventFrequencyTable::EventFrequencyTable(std::vector<EventRow> rows, CodeSchema schema)
    : rows_(std::move(rows)), schema_(std::move(schema)) {
  if (rows_.empty()) {
    throw Error(ErrorKind::EmptyLedger, "frequency table has no events");
  }
  std::unordered_map<std::string_view, std::size_t> ids;
  for (const auto& row : rows_) {
    if (row.count == 0) {
      throw Error(ErrorKind::InvalidDistribution,
                  fmt::format("event '{}' has zero occurrences", row.event_id));
    }
    if (!ids.try_emplace(row.event_id, 0).second) {
      throw Error(ErrorKind::DuplicateEventConflict,
                  fmt::format("event '{}' appears twice in the table", row.event_id));
    }
    total_ += row.count;
  }
}

double EventFrequencyTable::probability(std::size_t i) const {
  return static_cast<double>(rows_.at(i).count) / static_cast<double>(total_);
}

EventFrequencyTable tally_events(const Ledger& ledger) {
  if (ledger.records.empty()) {
    throw Error(ErrorKind::EmptyLedger, "ledger has no records");
  }
  std::vector<EventRow> rows;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& rec : ledger.records) {
    const auto [it, inserted] = index.try_emplace(rec.event_id, rows.size());
    if (inserted) {
      rows.push_back({rec.event_id, rec.description, rec.debit_code, rec.credit_code, 0});
    } else if (rows[it->second].debit_code != rec.debit_code ||
               rows[it->second].credit_code != rec.credit_code) {
      throw Error(ErrorKind::DuplicateEventConflict,
                  fmt::format("event '{}' carries two classifications", rec.event_id));
    }
    rows[it->second].count += rec.count;
  }
  return EventFrequencyTable(std::move(rows), ledger.schema);
}

}  // namespace accinfo
