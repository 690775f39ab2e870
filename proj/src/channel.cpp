// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#include "accinfo/channel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>

#include <fmt/format.h>

#include "accinfo/error.hpp"
#include "accinfo/level_analysis.hpp"
#include "csv.hpp"

namespace accinfo {

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  SparseMatrix m(dense.size(), cols);
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) {
      throw Error(ErrorKind::DimensionMismatch,
                  fmt::format("row {} has {} columns, expected {}", r + 1, dense[r].size(), cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (dense[r][c] != 0.0) m.data_[r].push_back({c, dense[r][c]});
    }
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseMatrix::set(std::size_t r, std::size_t c, double value) {
  if (r >= rows_ || c >= cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("({}, {}) outside {}x{} matrix", r, c, rows_, cols_));
  }
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  const bool present = it != row.end() && it->col == c;
  if (value == 0.0) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    row.insert(it, Entry{c, value});
  }
}

double SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  return it != row.end() && it->col == c ? it->value : 0.0;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols_, rows_);
  // Visiting rows in order keeps each transposed row sorted.
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  }
  return t;
}

std::vector<double> SparseMatrix::row_sums() const {
  std::vector<double> sums(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) sums[r] += e.value;
  }
  return sums;
}

std::vector<double> SparseMatrix::column_sums() const {
  std::vector<double> sums(cols_, 0.0);
  for (const auto& row : data_) {
    for (const auto& e : row) sums[e.col] += e.value;
  }
  return sums;
}

DenseMatrix SparseMatrix::to_dense() const {
  DenseMatrix dense(rows_, std::vector<double>(cols_, 0.0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) dense[r][e.col] = e.value;
  }
  return dense;
}

// ---------------------------------------------------------------------------
// Distribution, labels, channel

Distribution::Distribution(std::vector<std::string> labels, std::vector<double> p, double tolerance)
    : labels_(std::move(labels)), p_(std::move(p)) {
  if (labels_.size() != p_.size()) {
    throw Error(ErrorKind::InvalidDistribution,
                fmt::format("{} labels for {} probabilities", labels_.size(), p_.size()));
  }
  if (p_.empty()) {
    throw Error(ErrorKind::InvalidDistribution, "empty distribution");
  }
  std::unordered_set<std::string_view> unique;
  double sum = 0.0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!std::isfinite(p_[i]) || p_[i] < 0.0) {
      throw Error(ErrorKind::InvalidDistribution,
                  fmt::format("entry '{}' = {} is not a probability", labels_[i], p_[i]));
    }
    if (!unique.insert(labels_[i]).second) {
      throw Error(ErrorKind::InvalidDistribution, fmt::format("duplicate label '{}'", labels_[i]));
    }
    sum += p_[i];
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw Error(ErrorKind::InvalidDistribution, fmt::format("probabilities sum to {:.17g}", sum));
  }
}

std::string ClassificationLabel::text(const CodeSchema& schema) const {
  return format_code(debit_prefix, schema) + "/" + format_code(credit_prefix, schema);
}

ClassificationChannel::ClassificationChannel(Distribution input, SparseMatrix transition,
                                             std::vector<std::string> output_labels,
                                             std::vector<ClassificationLabel> classifications,
                                             std::optional<std::uint64_t> max_classes)
    : input_(std::move(input)),
      transition_(std::move(transition)),
      output_labels_(std::move(output_labels)),
      classifications_(std::move(classifications)),
      max_classes_(max_classes) {
  if (transition_.rows() != input_.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("transition has {} rows for {} events", transition_.rows(),
                            input_.size()));
  }
  if (transition_.cols() != output_labels_.size() || output_labels_.empty()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("transition has {} columns for {} output labels", transition_.cols(),
                            output_labels_.size()));
  }
  if (!classifications_.empty() && classifications_.size() != output_labels_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "classification labels not parallel to columns");
  }
  std::unordered_set<std::string_view> unique;
  for (const auto& label : output_labels_) {
    if (!unique.insert(label).second) {
      throw Error(ErrorKind::InvalidDistribution, fmt::format("duplicate output label '{}'", label));
    }
  }
  for (std::size_t r = 0; r < transition_.rows(); ++r) {
    double sum = 0.0;
    for (const auto& e : transition_.row(r)) {
      if (!(e.value >= 0.0 && e.value <= 1.0)) {
        throw Error(ErrorKind::RowNotStochastic,
                    fmt::format("row {} entry {} = {} outside [0, 1]", r + 1, e.col + 1, e.value));
      }
      sum += e.value;
    }
    if (std::abs(sum - 1.0) > kIdentityTolerance) {
      throw Error(ErrorKind::RowNotStochastic,
                  fmt::format("row {} sums to {:.17g}", r + 1, sum));
    }
    const auto row = transition_.row(r);
    if (row.size() != 1 || row.front().value != 1.0) deterministic_ = false;
  }
}

std::size_t ClassificationChannel::collapsed_labels() const {
  return static_cast<std::size_t>(std::count_if(classifications_.begin(), classifications_.end(),
                                                [](const auto& l) { return l.collapsed(); }));
}

JointDistribution::JointDistribution(SparseMatrix joint) : joint_(std::move(joint)) {
  double total = 0.0;
  for (std::size_t r = 0; r < joint_.rows(); ++r) {
    for (const auto& e : joint_.row(r)) {
      if (!(e.value >= 0.0) || !std::isfinite(e.value)) {
        throw Error(ErrorKind::InvalidDistribution,
                    fmt::format("joint entry ({}, {}) = {}", r + 1, e.col + 1, e.value));
      }
      total += e.value;
    }
  }
  if (std::abs(total - 1.0) > kIdentityTolerance) {
    throw Error(ErrorKind::InvalidDistribution, fmt::format("joint mass {:.17g}", total));
  }
}

// ---------------------------------------------------------------------------
// Operations

ClassificationChannel build_channel(const EventFrequencyTable& table, Level level) {
  const CodeSchema& schema = table.schema();
  if (level.value() > schema.levels()) {
    throw Error(ErrorKind::LevelOutOfRange,
                fmt::format("level {} but schema has {} levels", level.value(), schema.levels()));
  }
  const auto& rows = table.rows();

  std::vector<std::string> event_labels;
  std::vector<double> p_x;
  event_labels.reserve(rows.size());
  p_x.reserve(rows.size());

  std::map<std::pair<AccountCode, AccountCode>, std::size_t> column_of;
  std::vector<ClassificationLabel> classes;
  std::vector<std::size_t> assigned;
  std::set<AccountCode> accounts;
  assigned.reserve(rows.size());

  for (std::size_t i = 0; i < rows.size(); ++i) {
    event_labels.push_back(rows[i].event_id);
    p_x.push_back(table.probability(i));
    auto debit = truncate_to_level(rows[i].debit_code, level);
    auto credit = truncate_to_level(rows[i].credit_code, level);
    accounts.insert(debit);
    accounts.insert(credit);
    auto [it, inserted] = column_of.try_emplace({debit, credit}, classes.size());
    if (inserted) {
      classes.push_back({std::move(debit), std::move(credit), level.value()});
    }
    assigned.push_back(it->second);
  }

  SparseMatrix transition(rows.size(), classes.size());
  for (std::size_t i = 0; i < assigned.size(); ++i) transition.set(i, assigned[i], 1.0);

  std::vector<std::string> output_labels;
  output_labels.reserve(classes.size());
  for (const auto& c : classes) output_labels.push_back(c.text(schema));

  std::optional<std::uint64_t> max_classes;
  if (accounts.size() >= 2) max_classes = max_classifications(accounts.size());

  return ClassificationChannel(Distribution(std::move(event_labels), std::move(p_x)),
                               std::move(transition), std::move(output_labels), std::move(classes),
                               max_classes);
}

Distribution output_distribution(const ClassificationChannel& ch) {
  const auto& p_x = ch.input().probabilities();
  const auto& t = ch.transition();
  std::vector<double> p_y(ch.classes(), 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (const auto& e : t.row(i)) p_y[e.col] += p_x[i] * e.value;
  }
  return Distribution(ch.output_labels(), std::move(p_y));
}

SparseMatrix posterior_matrix(const ClassificationChannel& ch, const Distribution& p_y) {
  if (p_y.size() != ch.classes()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("P_Y has {} entries for {} classes", p_y.size(), ch.classes()));
  }
  const auto& p_x = ch.input().probabilities();
  const auto& t = ch.transition();
  SparseMatrix post(t.rows(), t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (p_x[i] == 0.0) continue;
    for (const auto& e : t.row(i)) {
      const double mass = p_x[i] * e.value;
      if (mass == 0.0) continue;
      if (p_y[e.col] == 0.0) {
        throw Error(ErrorKind::ZeroOutputProbability,
                    fmt::format("class '{}' has P(y) = 0 but receives mass from '{}'",
                                ch.output_labels()[e.col], ch.input().labels()[i]));
      }
      post.set(i, e.col, mass / p_y[e.col]);
    }
  }
  return post;
}

std::vector<double> log_vector(const Distribution& dist) {
  std::vector<double> out(dist.size(), 0.0);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] > 0.0 && dist[i] < 1.0) out[i] = -std::log2(dist[i]);
  }
  return out;
}

SparseMatrix log_matrix(const SparseMatrix& posterior) {
  SparseMatrix out = posterior.transposed();
  SparseMatrix logs(out.rows(), out.cols());
  for (std::size_t j = 0; j < out.rows(); ++j) {
    for (const auto& e : out.row(j)) {
      if (e.value < 0.0 || e.value > 1.0) {
        throw Error(ErrorKind::InvalidDistribution,
                    fmt::format("posterior entry {} outside [0, 1]", e.value));
      }
      logs.set(j, e.col, -std::log2(e.value));
    }
  }
  return logs;
}

JointDistribution joint_distribution(const ClassificationChannel& ch) {
  const auto& p_x = ch.input().probabilities();
  const auto& t = ch.transition();
  SparseMatrix joint(t.rows(), t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (const auto& e : t.row(i)) joint.set(i, e.col, p_x[i] * e.value);
  }
  return JointDistribution(std::move(joint));
}

ClassificationChannel make_theoretical_channel(const Distribution& p_x, const DenseMatrix& transition,
                                               std::vector<std::string> output_labels) {
  if (transition.size() != p_x.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("transition has {} rows for {} events", transition.size(), p_x.size()));
  }
  const std::size_t cols = transition.front().size();
  if (output_labels.empty()) {
    for (std::size_t j = 0; j < cols; ++j) output_labels.push_back(fmt::format("y{}", j + 1));
  }
  if (output_labels.size() != cols || cols == 0) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("{} output labels for {} columns", output_labels.size(), cols));
  }

  DenseMatrix normalised = transition;
  for (std::size_t i = 0; i < normalised.size(); ++i) {
    auto& row = normalised[i];
    if (row.size() != cols) {
      throw Error(ErrorKind::DimensionMismatch,
                  fmt::format("row {} has {} columns, expected {}", i + 1, row.size(), cols));
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!std::isfinite(row[j]) || row[j] < 0.0 || row[j] > 1.0 + kStochasticTolerance) {
        throw Error(ErrorKind::RowNotStochastic,
                    fmt::format("row {} ('{}') entry {} = {} is not a probability", i + 1,
                                p_x.labels()[i], j + 1, row[j]));
      }
      sum += row[j];
    }
    if (std::abs(sum - 1.0) > kStochasticTolerance) {
      throw Error(ErrorKind::RowNotStochastic,
                  fmt::format("row {} ('{}') sums to {:.17g}", i + 1, p_x.labels()[i], sum));
    }
    for (auto& v : row) v /= sum;
  }

  std::vector<double> p = p_x.probabilities();
  double total = 0.0;
  for (double v : p) total += v;
  for (auto& v : p) v /= total;

  return ClassificationChannel(Distribution(p_x.labels(), std::move(p)),
                               SparseMatrix::from_dense(normalised), std::move(output_labels));
}

ClassificationChannel load_channel_csv(std::istream& source) {
  csv::Reader reader(source, ';');
  const auto header = reader.next();
  if (!header) throw Error(ErrorKind::CsvParseError, "row 1: missing header");
  if (header->fields.size() < 3 || header->fields[1] != "p_x") {
    throw Error(ErrorKind::CsvParseError,
                fmt::format("row {}: header must be <event>;p_x;<class>...", header->line));
  }
  std::vector<std::string> output_labels(header->fields.begin() + 2, header->fields.end());

  auto parse_number = [](const csv::Row& row, std::size_t col) {
    const std::string& text = row.fields[col];
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
      throw Error(ErrorKind::CsvParseError,
                  fmt::format("row {}, column {}: '{}' is not a number", row.line, col + 1, text));
    }
    return value;
  };

  std::vector<std::string> events;
  std::vector<double> p_x;
  DenseMatrix transition;
  while (auto row = reader.next()) {
    if (row->fields.size() != header->fields.size()) {
      throw Error(ErrorKind::CsvParseError,
                  fmt::format("row {}: {} fields, header declares {}", row->line,
                              row->fields.size(), header->fields.size()));
    }
    events.push_back(row->fields[0]);
    p_x.push_back(parse_number(*row, 1));
    std::vector<double> t;
    for (std::size_t c = 2; c < row->fields.size(); ++c) t.push_back(parse_number(*row, c));
    transition.push_back(std::move(t));
  }
  if (events.empty()) throw Error(ErrorKind::EmptyLedger, "channel file has no event rows");

  return make_theoretical_channel(Distribution(std::move(events), std::move(p_x), kStochasticTolerance),
                                  transition, std::move(output_labels));
}

}  // namespace accinfo
