// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

// Entropy and information measures of a classification channel, in bits.
//
// Every quantity is available along two independent routes:
//  * the matrix route, built on the probability block (P_X L_X, the
//    diagonal of P_{X/Y}^T L_XY averaged under P_Y, and I = H(X) - H(X|Y));
//  * the direct route, double sums over the joint distribution.
// measure_channel() evaluates both and refuses to report if they disagree.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "accinfo/channel.hpp"

namespace accinfo {

inline constexpr double kCrossCheckTolerance = 1e-9;

struct MeasureSet {
  double h_x = 0.0;
  double h_y = 0.0;
  double h_xy = 0.0;
  double h_x_given_y = 0.0;
  double i_xy = 0.0;
  double u_xy = 0.0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::optional<std::uint64_t> s_max;
  /// H(X) = H(Y) = 0, where U is defined as 1.
  bool degenerate = false;
};

/// Quantities of one route, before cross-checking.
struct RouteValues {
  double h_x = 0.0;
  double h_y = 0.0;
  double h_xy = 0.0;
  double h_x_given_y = 0.0;
  double i_xy = 0.0;
};

/// H = P L with L from log_vector().
double entropy(const Distribution& dist);

/// -sum P(x,y) log2 P(x,y)
double joint_entropy(const JointDistribution& joint);

/// Entry j = sum_i P(x_i|y_j) * L_XY(j, i): the diagonal of P_{X/Y}^T
/// against L_XY, without forming the S x S product.
std::vector<double> conditional_entropy_vector(const ClassificationChannel& ch,
                                               const SparseMatrix& posterior,
                                               const SparseMatrix& l_xy);

/// P_Y H_{X/Y}
double conditional_entropy(const Distribution& p_y, std::span<const double> h_vec);

/// -sum P(x,y) log2 (P(x,y) / P(y))
double conditional_entropy_direct(const JointDistribution& joint);

/// H(X) - H(X|Y). Rounding noise down to -1e-12 is clamped to zero; anything
/// more negative throws NegativeBeyondTolerance.
double mutual_information(double h_x, double h_x_given_y);

/// 2 I / (H(X) + H(Y)); 1 when both entropies vanish.
double symmetric_uncertainty(double i_xy, double h_x, double h_y);

/// +sum P(x,y) log2 (P(x,y) / (P(x) P(y)))
double mutual_information_direct(const JointDistribution& joint);

RouteValues matrix_route(const ClassificationChannel& ch);
RouteValues direct_route(const ClassificationChannel& ch);

/// Full measure set from the matrix route, after checking it against the
/// direct route within kCrossCheckTolerance (CrossCheckFailure otherwise).
MeasureSet measure_channel(const ClassificationChannel& ch);

}  // namespace accinfo
