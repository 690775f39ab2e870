// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "accinfo/coa.hpp"

namespace accinfo {

/// One posting: an economic event debiting one account and crediting another.
struct TransactionRecord {
  std::string event_id;
  std::string description;
  AccountCode debit_code;
  AccountCode credit_code;
  std::string period_tag;
  std::uint64_t count = 1;

  friend bool operator==(const TransactionRecord&, const TransactionRecord&) = default;
};

struct Ledger {
  std::vector<TransactionRecord> records;
  CodeSchema schema;
};

/// Accepted CSV layouts. Both use the header
/// `event_id;description;debit_code;credit_code;period;count`.
enum class InputShape {
  Transactions,    // count column optional, defaults to 1
  FrequencyTable,  // count column and values mandatory
};

/// Reads a ';'-separated ledger. Row numbers in errors are 1-based physical
/// lines, the header being row 1.
Ledger load_ledger_csv(std::istream& source, const CodeSchema& schema,
                       InputShape shape = InputShape::Transactions);
Ledger load_ledger_file(const std::filesystem::path& path, const CodeSchema& schema,
                        InputShape shape = InputShape::Transactions);

/// Partition by period tag; record order inside each part is preserved.
std::map<std::string, Ledger> split_periods(const Ledger& ledger);

struct EventRow {
  std::string event_id;
  std::string description;
  AccountCode debit_code;
  AccountCode credit_code;
  std::uint64_t count = 0;
};

/// Distinct events with their occurrence counts, in first-appearance order.
class EventFrequencyTable {
 public:
  EventFrequencyTable(std::vector<EventRow> rows, CodeSchema schema);

  const std::vector<EventRow>& rows() const noexcept { return rows_; }
  const CodeSchema& schema() const noexcept { return schema_; }

  /// Number of transactions.
  std::uint64_t total() const noexcept { return total_; }
  /// Number of distinct events.
  std::size_t distinct_events() const noexcept { return rows_.size(); }

  /// n_i / N_total
  double probability(std::size_t i) const;

 private:
  std::vector<EventRow> rows_;
  CodeSchema schema_;
  std::uint64_t total_ = 0;
};

/// Aggregates records by event_id. Throws Error(EmptyLedger) on no records.
EventFrequencyTable tally_events(const Ledger& ledger);

}  // namespace accinfo
