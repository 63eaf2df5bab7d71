// Copyright 2026 The qsd developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsd/metrics.hpp"

#include <cmath>

#include "qsd/errors.hpp"

namespace qsd {

MetricsReport metrics_from_confusion(Eigen::MatrixXi confusion) {
  if (confusion.rows() != confusion.cols() || confusion.rows() < 2) {
    throw ShapeError("confusion matrix must be square with >= 2 classes");
  }
  if (confusion.sum() <= 0) {
    throw DataError("confusion matrix is empty");
  }
  const Eigen::Index k = confusion.rows();
  const double total = static_cast<double>(confusion.sum());

  double recall_sum = 0.0;
  Eigen::Index classes_in_truth = 0;
  double f1_sum = 0.0;
  double p_observed = 0.0;
  double p_expected = 0.0;
  for (Eigen::Index c = 0; c < k; ++c) {
    const double tp = confusion(c, c);
    const double row = confusion.row(c).sum();
    const double col = confusion.col(c).sum();
    if (row > 0) {
      recall_sum += tp / row;
      ++classes_in_truth;
    }
    const double f1_den = row + col;  // 2 tp + fn + fp
    f1_sum += f1_den > 0 ? 2.0 * tp / f1_den : 0.0;
    p_observed += tp / total;
    p_expected += (row / total) * (col / total);
  }

  MetricsReport report;
  report.confusion = std::move(confusion);
  report.balanced_accuracy = recall_sum / static_cast<double>(classes_in_truth);
  report.f1_macro = f1_sum / static_cast<double>(k);
  const double chance_gap = 1.0 - p_expected;
  report.cohen_kappa =
      chance_gap == 0.0 ? 0.0 : (p_observed - p_expected) / chance_gap;
  return report;
}

namespace {

struct Moments {
  double mean_x = 0.0;
  double mean_y = 0.0;
  double var_x = 0.0;   // sum of squared deviations
  double var_y = 0.0;
  double cov = 0.0;     // sum of cross deviations
};

Moments moments(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ShapeError("pearson: input lengths differ");
  }
  if (xs.size() < 2) {
    throw ValidationError("pearson: need at least 2 samples");
  }
  Moments m;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    m.mean_x += xs[i];
    m.mean_y += ys[i];
  }
  m.mean_x /= n;
  m.mean_y /= n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - m.mean_x;
    const double dy = ys[i] - m.mean_y;
    m.var_x += dx * dx;
    m.var_y += dy * dy;
    m.cov += dx * dy;
  }
  return m;
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
  const Moments m = moments(xs, ys);
  if (m.var_x == 0.0 || m.var_y == 0.0) {
    throw ValidationError(
        "pearson: correlation undefined, an input has zero variance");
  }
  return m.cov / std::sqrt(m.var_x * m.var_y);
}

LinearFit least_squares_line(std::span<const double> xs,
                             std::span<const double> ys) {
  const Moments m = moments(xs, ys);
  if (m.var_x == 0.0) {
    throw ValidationError(
        "least_squares_line: undefined, x values have zero variance");
  }
  LinearFit fit;
  fit.slope = m.cov / m.var_x;
  fit.intercept = m.mean_y - fit.slope * m.mean_x;
  if (m.var_y == 0.0) {
    fit.r_squared = 1.0;  // constant y is matched exactly by slope 0
  } else {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
      ss_res += r * r;
    }
    fit.r_squared = 1.0 - ss_res / m.var_y;
  }
  return fit;
}

}  // namespace qsd
