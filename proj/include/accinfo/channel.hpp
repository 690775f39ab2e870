// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

// Probability block of the classification channel.
//
// The channel is the pair (P_X, P_{Y/X}): a distribution over economic events
// and a row-stochastic R x S transition matrix mapping events to
// classifications. From these the derived quantities P_Y = P_X P_{Y/X},
// the posterior P_{X/Y} and the -log2 matrices L_X and L_XY are built.
//
// Matrices are stored row-sparse. For ledger channels every row is one-hot,
// and the classification support S is the observed one, never the
// theoretical N_a(N_a-1) maximum.

#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "accinfo/coa.hpp"
#include "accinfo/ledger.hpp"

namespace accinfo {

/// Tolerance for algebraic identities between computed quantities.
inline constexpr double kIdentityTolerance = 1e-12;
/// Tolerance when validating user-supplied probabilities.
inline constexpr double kStochasticTolerance = 1e-9;

using DenseMatrix = std::vector<std::vector<double>>;

class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    double value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Zero entries are dropped.
  static SparseMatrix from_dense(const DenseMatrix& dense);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept;

  /// Sets (r, c). Setting zero removes the entry.
  void set(std::size_t r, std::size_t c, double value);
  double at(std::size_t r, std::size_t c) const;
  std::span<const Entry> row(std::size_t r) const { return data_.at(r); }

  SparseMatrix transposed() const;
  std::vector<double> row_sums() const;
  std::vector<double> column_sums() const;
  DenseMatrix to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> data_;  // entries sorted by column
};

/// Labelled probability vector.
class Distribution {
 public:
  /// Throws Error(InvalidDistribution) unless lengths match, labels are
  /// unique, entries are finite and non-negative and sum to 1 within
  /// `tolerance`.
  Distribution(std::vector<std::string> labels, std::vector<double> p,
               double tolerance = kIdentityTolerance);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<double>& probabilities() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> p_;
};

/// A (debit, credit) pair of account prefixes at one aggregation level.
struct ClassificationLabel {
  AccountCode debit_prefix;
  AccountCode credit_prefix;
  int level = 0;

  /// Distinct accounts whose prefixes coincide at this level.
  bool collapsed() const { return debit_prefix == credit_prefix; }
  std::string text(const CodeSchema& schema) const;

  friend bool operator==(const ClassificationLabel&, const ClassificationLabel&) = default;
};

class ClassificationChannel {
 public:
  /// Validates shapes, label uniqueness, entries in [0, 1] and row sums
  /// within kIdentityTolerance. `classifications` is either empty or
  /// parallel to `output_labels`.
  ClassificationChannel(Distribution input, SparseMatrix transition,
                        std::vector<std::string> output_labels,
                        std::vector<ClassificationLabel> classifications = {},
                        std::optional<std::uint64_t> max_classes = std::nullopt);

  const Distribution& input() const noexcept { return input_; }
  const SparseMatrix& transition() const noexcept { return transition_; }
  const std::vector<std::string>& output_labels() const noexcept { return output_labels_; }
  const std::vector<ClassificationLabel>& classifications() const noexcept {
    return classifications_;
  }

  std::size_t events() const noexcept { return input_.size(); }
  std::size_t classes() const noexcept { return output_labels_.size(); }
  /// Every row one-hot.
  bool deterministic() const noexcept { return deterministic_; }
  /// N_a(N_a-1) for ledger channels with at least two accounts.
  std::optional<std::uint64_t> max_classes() const noexcept { return max_classes_; }
  std::size_t collapsed_labels() const;

 private:
  Distribution input_;
  SparseMatrix transition_;
  std::vector<std::string> output_labels_;
  std::vector<ClassificationLabel> classifications_;
  std::optional<std::uint64_t> max_classes_;
  bool deterministic_ = true;
};

/// P(x_i, y_j) as an R x S matrix.
class JointDistribution {
 public:
  explicit JointDistribution(SparseMatrix joint);

  const SparseMatrix& matrix() const noexcept { return joint_; }
  std::vector<double> row_marginal() const { return joint_.row_sums(); }
  std::vector<double> column_marginal() const { return joint_.column_sums(); }

 private:
  SparseMatrix joint_;
};

/// Deterministic channel of a frequency table at `level`. Columns are the
/// distinct truncated (debit, credit) pairs in first-appearance order.
ClassificationChannel build_channel(const EventFrequencyTable& table, Level level);

/// P_Y = P_X P_{Y/X}.
Distribution output_distribution(const ClassificationChannel& ch);

/// P_{X/Y} (R x S): entry (i, j) = P(x_i) P(y_j|x_i) / P(y_j), i.e. the rows
/// of the transition scaled by P_X and the columns by 1/P_Y. Zero-mass
/// columns stay empty. Throws ZeroOutputProbability if `p_y` assigns zero to
/// a column that carries mass, DimensionMismatch on shape disagreement.
SparseMatrix posterior_matrix(const ClassificationChannel& ch, const Distribution& p_y);

/// L_X: -log2 p_i, or 0 where p_i = 0.
std::vector<double> log_vector(const Distribution& dist);

/// L_XY (S x R): entry (j, i) = -log2 P(x_i|y_j), or 0 where the posterior is 0.
SparseMatrix log_matrix(const SparseMatrix& posterior);

JointDistribution joint_distribution(const ClassificationChannel& ch);

/// Channel with an arbitrary row-stochastic transition. Inputs are accepted
/// within kStochasticTolerance and then renormalised. Throws
/// DimensionMismatch or RowNotStochastic.
ClassificationChannel make_theoretical_channel(const Distribution& p_x, const DenseMatrix& transition,
                                               std::vector<std::string> output_labels = {});

/// Reads a ';'-separated channel file:
///   event;p_x;<label y1>;...;<label yS>
///   x1;0.5;1;0
/// The p_x column is P_X; the remaining columns form P_{Y/X}.
ClassificationChannel load_channel_csv(std::istream& source);

}  // namespace accinfo
