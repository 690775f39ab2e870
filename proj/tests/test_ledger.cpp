// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"

#include "accinfo/error.hpp"
#include "accinfo/ledger.hpp"
#include "support.hpp"

using namespace accinfo;
using testing_support::kind_of;
using testing_support::message_of;

namespace {

const std::string kHeader = "event_id;description;debit_code;credit_code;period;count\n";

Ledger load(const std::string& text, InputShape shape = InputShape::Transactions,
            const CodeSchema& schema = CodeSchema()) {
  std::istringstream in(text);
  return load_ledger_csv(in, schema, shape);
}

}  // namespace

TEST_CASE("load_ledger_csv reads a counted row") {
  const auto ledger = load(kHeader + "2;Sales in the State;01.01.01.001.00001;03.01.01.001.00001;Y2;12\n");
  REQUIRE(ledger.records.size() == 1);
  const auto& rec = ledger.records.front();
  CHECK(rec.event_id == "2");
  CHECK(rec.description == "Sales in the State");
  CHECK(rec.debit_code.text() == "01.01.01.001.00001");
  CHECK(rec.credit_code.text() == "03.01.01.001.00001");
  CHECK(rec.period_tag == "Y2");
  CHECK(rec.count == 12);
  // 12 of the 719 second-year transactions.
  CHECK(static_cast<double>(rec.count) / 719.0 == doctest::Approx(0.0167).epsilon(0.003));
}

TEST_CASE("load_ledger_csv shapes and defaults") {
  SUBCASE("header only gives an empty ledger") {
    CHECK(load(kHeader).records.empty());
  }
  SUBCASE("count column may be absent or blank for transaction ledgers") {
    const auto a = load("event_id;description;debit_code;credit_code;period\n"
                        "a;x;01.01.01.001.00001;02.01.01.001.00001;Y1\n");
    CHECK(a.records.front().count == 1);
    const auto b = load(kHeader + "a;x;01.01.01.001.00001;02.01.01.001.00001;Y1;\n");
    CHECK(b.records.front().count == 1);
  }
  SUBCASE("frequency tables require counts") {
    CHECK(kind_of([] {
            load("event_id;description;debit_code;credit_code;period\n", InputShape::FrequencyTable);
          }) == ErrorKind::CsvParseError);
    CHECK(kind_of([] {
            load(kHeader + "a;x;01.01.01.001.00001;02.01.01.001.00001;Y1;\n", InputShape::FrequencyTable);
          }) == ErrorKind::CsvParseError);
  }
  SUBCASE("CRLF, BOM, blank lines and quoted fields") {
    const auto l = load("\xEF\xBB\xBF" "event_id;description;debit_code;credit_code;period;count\r\n"
                        "\r\n"
                        "a;\"Rent; office\";01.01.01.001.00001;02.01.01.001.00001;Y1;3\r\n");
    REQUIRE(l.records.size() == 1);
    CHECK(l.records[0].description == "Rent; office");
    CHECK(l.records[0].count == 3);
  }
  SUBCASE("row order preserved") {
    const auto l = load(kHeader + "b;;01.01.01.001.00001;02.01.01.001.00001;Y1;1\n" +
                        "a;;01.01.01.001.00002;02.01.01.001.00001;Y1;1\n");
    CHECK(l.records[0].event_id == "b");
    CHECK(l.records[1].event_id == "a");
  }
}

TEST_CASE("load_ledger_csv errors are located") {
  SUBCASE("debit equals credit") {
    CHECK(kind_of([] { load(kHeader + "a;x;01.01.01.001.00001;01.01.01.001.00001;Y1;1\n"); }) ==
          ErrorKind::DuplicateAccountError);
  }
  SUBCASE("malformed code names the row") {
    std::string text = kHeader;
    for (int i = 0; i < 5; ++i) {
      text += "e" + std::to_string(i) + ";;01.01.01.001.0000" + std::to_string(i + 1) +
              ";02.01.01.001.00001;Y1;1\n";
    }
    text += "bad;;01.01.1.001.00001;02.01.01.001.00001;Y1;1\n";  // row 7
    const auto msg = message_of([&] { load(text); });
    CHECK(msg.find("MalformedCode") == 0);
    CHECK(msg.find("row 7") != std::string::npos);
    CHECK(msg.find("debit_code") != std::string::npos);
  }
  SUBCASE("conflicting classifications for one event") {
    const auto msg = message_of([] {
      load(kHeader + "a;;01.01.01.001.00001;02.01.01.001.00001;Y1;1\n" +
           "a;;01.01.01.001.00001;02.01.01.001.00002;Y2;1\n");
    });
    CHECK(msg.find("DuplicateEventConflict") == 0);
    CHECK(msg.find("row 3") != std::string::npos);
  }
  SUBCASE("bad count") {
    CHECK(kind_of([] { load(kHeader + "a;;01.01.01.001.00001;02.01.01.001.00001;Y1;0\n"); }) ==
          ErrorKind::CsvParseError);
    CHECK(kind_of([] { load(kHeader + "a;;01.01.01.001.00001;02.01.01.001.00001;Y1;-2\n"); }) ==
          ErrorKind::CsvParseError);
  }
  SUBCASE("field count and header") {
    CHECK(kind_of([] { load(kHeader + "a;;01.01.01.001.00001;Y1;1\n"); }) == ErrorKind::CsvParseError);
    CHECK(kind_of([] { load("id;description;debit_code;credit_code;period;count\n"); }) ==
          ErrorKind::CsvParseError);
    CHECK(kind_of([] { load(""); }) == ErrorKind::CsvParseError);
    CHECK(kind_of([] { load(kHeader + "a;\"open;01.01.01.001.00001;02.01.01.001.00001;Y1;1\n"); }) ==
          ErrorKind::CsvParseError);
  }
}

TEST_CASE("split_periods") {
  const auto ledger = load(kHeader + "a;;01.01.01.001.00001;02.01.01.001.00001;Y1;1\n" +
                           "b;;01.01.01.001.00002;02.01.01.001.00001;Y2;1\n" +
                           "c;;01.01.01.001.00003;02.01.01.001.00001;Y1;1\n");
  SUBCASE("partition") {
    const auto parts = split_periods(ledger);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at("Y1").records.size() == 2);
    CHECK(parts.at("Y2").records.size() == 1);
    CHECK(parts.at("Y1").records[1].event_id == "c");
  }
  SUBCASE("single period is the identity") {
    Ledger one = ledger;
    for (auto& r : one.records) r.period_tag = "Y";
    const auto parts = split_periods(one);
    REQUIRE(parts.size() == 1);
    CHECK(parts.at("Y").records == one.records);
  }
}

TEST_CASE("tally_events") {
  SUBCASE("counting") {
    const auto ledger = load(kHeader + "a;;01.01.01.001.00001;02.01.01.001.00001;P;1\n" +
                             "a;;01.01.01.001.00001;02.01.01.001.00001;P;1\n" +
                             "b;;01.01.01.001.00002;02.01.01.001.00001;P;1\n" +
                             "c;;01.01.01.001.00003;02.01.01.001.00001;P;1\n");
    const auto table = tally_events(ledger);
    REQUIRE(table.rows().size() == 3);
    CHECK(table.rows()[0].event_id == "a");
    CHECK(table.rows()[0].count == 2);
    CHECK(table.rows()[1].count == 1);
    CHECK(table.rows()[2].count == 1);
    CHECK(table.total() == 4);
    CHECK(table.distinct_events() == 3);
    CHECK(table.probability(0) == 0.5);
  }
  SUBCASE("empty ledger") {
    CHECK(kind_of([] { tally_events(Ledger{}); }) == ErrorKind::EmptyLedger);
  }
}

TEST_CASE("tally properties over random ledgers") {
  std::mt19937_64 rng(7);
  const CodeSchema schema;
  for (int n = 0; n < 200; ++n) {
    Ledger ledger = testing_support::random_ledger(rng, schema, 30);
    // Spread records across three periods and duplicate some of them.
    std::uniform_int_distribution<int> period(0, 2);
    const auto base = ledger.records;
    for (const auto& r : base) {
      if (period(rng) == 0) ledger.records.push_back(r);
    }
    for (auto& r : ledger.records) r.period_tag = "P" + std::to_string(period(rng));

    const auto table = tally_events(ledger);
    std::uint64_t sum = 0;
    double p_sum = 0.0;
    for (std::size_t i = 0; i < table.rows().size(); ++i) {
      sum += table.rows()[i].count;
      p_sum += table.probability(i);
      CHECK(table.probability(i) > 0.0);
    }
    CHECK(sum == table.total());
    CHECK(p_sum == doctest::Approx(1.0).epsilon(1e-12));

    // Permutation invariance.
    Ledger shuffled = ledger;
    std::shuffle(shuffled.records.begin(), shuffled.records.end(), rng);
    const auto t2 = tally_events(shuffled);
    std::map<std::string, std::uint64_t> c1, c2;
    for (const auto& r : table.rows()) c1[r.event_id] = r.count;
    for (const auto& r : t2.rows()) c2[r.event_id] = r.count;
    CHECK(c1 == c2);
    CHECK(t2.total() == table.total());

    // Per-period totals add up.
    std::uint64_t per_period = 0;
    for (const auto& [tag, part] : split_periods(ledger)) per_period += tally_events(part).total();
    CHECK(per_period == table.total());
  }
}
