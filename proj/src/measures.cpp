// Copyright 2026 The accinfo Authors
// SPDX-License-Identifier: Apache-2.0

#include "accinfo/measures.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "accinfo/error.hpp"

namespace accinfo {

namespace {

double entropy_of(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0 && v < 1.0) h -= v * std::log2(v);
  }
  return h;
}

void cross_check(const char* name, double matrix, double direct) {
  if (!(std::abs(matrix - direct) <= kCrossCheckTolerance)) {
    throw Error(ErrorKind::CrossCheckFailure,
                fmt::format("{}: matrix route {:.17g}, direct route {:.17g}", name, matrix, direct));
  }
}

}  // namespace

double entropy(const Distribution& dist) {
  const auto logs = log_vector(dist);
  const auto& p = dist.probabilities();
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) h += p[i] * logs[i];
  return h;
}

double joint_entropy(const JointDistribution& joint) {
  const auto& m = joint.matrix();
  double h = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) {
      if (e.value > 0.0) h -= e.value * std::log2(e.value);
    }
  }
  return h;
}

std::vector<double> conditional_entropy_vector(const ClassificationChannel& ch,
                                               const SparseMatrix& posterior,
                                               const SparseMatrix& l_xy) {
  const std::size_t r = ch.events();
  const std::size_t s = ch.classes();
  if (posterior.rows() != r || posterior.cols() != s || l_xy.rows() != s || l_xy.cols() != r) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("posterior {}x{} and L_XY {}x{} for a {}x{} channel", posterior.rows(),
                            posterior.cols(), l_xy.rows(), l_xy.cols(), r, s));
  }
  std::vector<double> h(s, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    for (const auto& e : posterior.row(i)) h[e.col] += e.value * l_xy.at(e.col, i);
  }
  return h;
}

double conditional_entropy(const Distribution& p_y, std::span<const double> h_vec) {
  if (p_y.size() != h_vec.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("P_Y has {} entries, H_X/Y has {}", p_y.size(), h_vec.size()));
  }
  double h = 0.0;
  for (std::size_t j = 0; j < h_vec.size(); ++j) h += p_y[j] * h_vec[j];
  return h;
}

double conditional_entropy_direct(const JointDistribution& joint) {
  const auto p_y = joint.column_marginal();
  const auto& m = joint.matrix();
  double h = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) {
      if (e.value > 0.0) h -= e.value * std::log2(e.value / p_y[e.col]);
    }
  }
  return h;
}

double mutual_information(double h_x, double h_x_given_y) {
  const double i = h_x - h_x_given_y;
  if (i < -kIdentityTolerance) {
    throw Error(ErrorKind::NegativeBeyondTolerance,
                fmt::format("H(X) = {:.17g} < H(X|Y) = {:.17g}", h_x, h_x_given_y));
  }
  return std::max(i, 0.0);
}

double symmetric_uncertainty(double i_xy, double h_x, double h_y) {
  const double denom = h_x + h_y;
  if (denom <= 0.0) return 1.0;
  return std::clamp(2.0 * i_xy / denom, 0.0, 1.0);
}

double mutual_information_direct(const JointDistribution& joint) {
  const auto p_x = joint.row_marginal();
  const auto p_y = joint.column_marginal();
  const auto& m = joint.matrix();
  double total = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) {
      if (e.value > 0.0) total += e.value * std::log2(e.value / (p_x[i] * p_y[e.col]));
    }
  }
  return total;
}

RouteValues matrix_route(const ClassificationChannel& ch) {
  const Distribution p_y = output_distribution(ch);
  const SparseMatrix post = posterior_matrix(ch, p_y);
  const SparseMatrix l_xy = log_matrix(post);
  const auto h_vec = conditional_entropy_vector(ch, post, l_xy);

  RouteValues v;
  v.h_x = entropy(ch.input());
  v.h_y = entropy(p_y);
  v.h_x_given_y = conditional_entropy(p_y, h_vec);
  v.h_xy = v.h_x_given_y + v.h_y;
  v.i_xy = mutual_information(v.h_x, v.h_x_given_y);
  return v;
}

RouteValues direct_route(const ClassificationChannel& ch) {
  const JointDistribution joint = joint_distribution(ch);
  RouteValues v;
  v.h_x = entropy_of(joint.row_marginal());
  v.h_y = entropy_of(joint.column_marginal());
  v.h_xy = joint_entropy(joint);
  v.h_x_given_y = conditional_entropy_direct(joint);
  v.i_xy = mutual_information_direct(joint);
  return v;
}

MeasureSet measure_channel(const ClassificationChannel& ch) {
  const RouteValues m = matrix_route(ch);
  const RouteValues d = direct_route(ch);
  cross_check("H(X)", m.h_x, d.h_x);
  cross_check("H(Y)", m.h_y, d.h_y);
  cross_check("H(X,Y)", m.h_xy, d.h_xy);
  cross_check("H(X|Y)", m.h_x_given_y, d.h_x_given_y);
  cross_check("I(X,Y)", m.i_xy, d.i_xy);

  MeasureSet out;
  out.h_x = m.h_x;
  out.h_y = m.h_y;
  out.h_xy = m.h_xy;
  out.h_x_given_y = m.h_x_given_y;
  out.i_xy = m.i_xy;
  out.u_xy = symmetric_uncertainty(m.i_xy, m.h_x, m.h_y);
  out.degenerate = m.h_x + m.h_y <= 0.0;
  out.r = ch.events();
  out.s = ch.classes();
  out.s_max = ch.max_classes();
  return out;
}

}  // namespace accinfo
