// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only helpers: a brute-force dense oracle that shares no code with the
// library routes, and seeded generators for channels and ledgers.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "doctest.h"

#include "accinfo/channel.hpp"
#include "accinfo/coa.hpp"
#include "accinfo/error.hpp"
#include "accinfo/ledger.hpp"

namespace testing_support {

using accinfo::DenseMatrix;

/// Kind of the accinfo::Error thrown by fn; fails the test if none is thrown.
template <typename Fn>
accinfo::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const accinfo::Error& e) {
    return e.kind();
  }
  FAIL("expected accinfo::Error");
  return accinfo::ErrorKind::Io;
}

template <typename Fn>
std::string message_of(Fn&& fn) {
  try {
    fn();
  } catch (const accinfo::Error& e) {
    return e.what();
  }
  return {};
}

// ---------------------------------------------------------------------------
// Oracle: dense joint table, natural logs, identities instead of the
// library's conditional/posterior constructions.

struct Truth {
  double h_x = 0.0;
  double h_y = 0.0;
  double h_xy = 0.0;
  double h_x_given_y = 0.0;
  double i_xy = 0.0;
  std::vector<double> p_y;
};

inline double shannon_bits(const std::vector<double>& p) {
  double nats = 0.0;
  for (double v : p) {
    if (v > 0.0) nats += v * std::log(v);
  }
  return -nats / std::log(2.0);
}

inline double binary_entropy(double p) { return shannon_bits({p, 1.0 - p}); }

inline Truth brute_force(const std::vector<double>& p_x, const DenseMatrix& t) {
  const std::size_t r = p_x.size();
  const std::size_t s = t.front().size();
  std::vector<double> flat;
  Truth out;
  out.p_y.assign(s, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const double pj = p_x[i] * t[i][j];
      flat.push_back(pj);
      out.p_y[j] += pj;
    }
  }
  out.h_x = shannon_bits(p_x);
  out.h_y = shannon_bits(out.p_y);
  out.h_xy = shannon_bits(flat);
  out.h_x_given_y = out.h_xy - out.h_y;
  out.i_xy = out.h_x + out.h_y - out.h_xy;
  return out;
}

// ---------------------------------------------------------------------------
// Generators

struct RandomChannel {
  std::vector<double> p_x;
  DenseMatrix transition;
  bool one_hot = false;
};

/// R, S in [1, max_dim]; roughly half the instances one-hot.
inline RandomChannel random_channel(std::mt19937_64& rng, std::size_t max_dim = 12) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t r = dim(rng);
  const std::size_t s = dim(rng);

  RandomChannel ch;
  ch.one_hot = unit(rng) < 0.5;
  double total = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    // Occasional zero-probability events exercise the 0 log 0 convention.
    const double w = unit(rng) < 0.1 && r > 1 ? 0.0 : unit(rng) + 1e-3;
    ch.p_x.push_back(w);
    total += w;
  }
  if (total == 0.0) {
    ch.p_x[0] = 1.0;
    total = 1.0;
  }
  for (auto& v : ch.p_x) v /= total;

  std::uniform_int_distribution<std::size_t> col(0, s - 1);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<double> row(s, 0.0);
    if (ch.one_hot) {
      row[col(rng)] = 1.0;
    } else {
      double sum = 0.0;
      for (auto& v : row) {
        v = unit(rng) < 0.3 ? 0.0 : unit(rng);
        sum += v;
      }
      if (sum == 0.0) {
        row[col(rng)] = 1.0;
        sum = 1.0;
      }
      for (auto& v : row) v /= sum;
    }
    ch.transition.push_back(std::move(row));
  }
  return ch;
}

inline accinfo::ClassificationChannel to_channel(const RandomChannel& rc) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rc.p_x.size(); ++i) labels.push_back(fmt::format("x{}", i + 1));
  return accinfo::make_theoretical_channel(accinfo::Distribution(labels, rc.p_x), rc.transition);
}

/// Random code under `schema` with few distinct values per segment so that
/// truncation merges classifications.
inline accinfo::AccountCode random_code(std::mt19937_64& rng, const accinfo::CodeSchema& schema,
                                        int alphabet) {
  std::uniform_int_distribution<int> digit(1, alphabet);
  std::vector<std::string> segs;
  for (int w : schema.segment_widths()) {
    segs.push_back(fmt::format("{:0{}d}", digit(rng), w));
  }
  return accinfo::AccountCode(std::move(segs));
}

/// Ledger whose events have pairwise distinct, debit != credit code pairs,
/// so the finest-level classification is injective.
inline accinfo::Ledger random_ledger(std::mt19937_64& rng, const accinfo::CodeSchema& schema,
                                     std::size_t max_events = 40, const std::string& period = "P") {
  std::uniform_int_distribution<std::size_t> n_events(1, max_events);
  std::uniform_int_distribution<int> alphabet(2, 3);
  std::uniform_int_distribution<std::uint64_t> count(1, 30);
  const int a = alphabet(rng);
  const std::size_t r = n_events(rng);

  accinfo::Ledger ledger{{}, schema};
  std::set<std::pair<accinfo::AccountCode, accinfo::AccountCode>> used;
  std::size_t attempts = 0;
  while (ledger.records.size() < r && attempts++ < 20 * max_events) {
    auto debit = random_code(rng, schema, a);
    auto credit = random_code(rng, schema, a);
    if (debit == credit || !used.insert({debit, credit}).second) continue;
    ledger.records.push_back({fmt::format("e{}", ledger.records.size() + 1), "", std::move(debit),
                              std::move(credit), period, count(rng)});
  }
  return ledger;
}

}  // namespace testing_support
