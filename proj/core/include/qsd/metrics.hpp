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

#pragma once

#include <span>

#include <Eigen/Dense>

namespace qsd {

/// Classification quality summary. confusion(i, j) counts points of true
/// class i+1 predicted as class j+1, so row sums are per-class test counts.
struct MetricsReport {
  Eigen::MatrixXi confusion;
  double balanced_accuracy = 0.0;
  double f1_macro = 0.0;
  double cohen_kappa = 0.0;
};

/// Computes the scalar metrics from a confusion matrix.
///   balanced accuracy: mean of per-class recall over classes present in the
///     truth;
///   macro F1: unweighted mean of per-class F1, where a class with no true
///     and no predicted points contributes 0;
///   Cohen's kappa: (p_o - p_e) / (1 - p_e) with p_e from the marginals,
///     defined as 0 when p_e = 1.
MetricsReport metrics_from_confusion(Eigen::MatrixXi confusion);

/// Sample Pearson correlation. Throws ValidationError when either input has
/// zero variance (the correlation is undefined).
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Least-squares line y = slope * x + intercept and its R^2.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Throws ValidationError when xs has zero variance.
LinearFit least_squares_line(std::span<const double> xs,
                             std::span<const double> ys);

}  // namespace qsd
