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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsd/discrimination.hpp"
#include "qsd/encoding.hpp"
#include "qsd/metrics.hpp"

namespace qsd {

enum class ClassifierKind {
  kHelstrom,  // binary, optimal measurement
  kPgm,       // any number of classes, Pretty Good measurement
};

std::string_view classifier_kind_name(ClassifierKind kind);
std::optional<ClassifierKind> classifier_kind_from_name(std::string_view name);

/// Immutable deployable classifier: per-class priors and centroids at a fixed
/// copy count plus the derived measurement. Thread-safe to share once built.
class TrainedModel {
 public:
  /// Validates the cross-field invariants (arity, dimensions, priors) and
  /// derives the training bound and, for PGM models, the sigma rank flag.
  TrainedModel(ClassifierKind kind, int copies, int feature_dim,
               std::vector<double> priors, std::vector<DensityMatrix> centroids,
               Measurement measurement);

  ClassifierKind kind() const { return kind_; }
  int copies() const { return copies_; }
  int feature_dim() const { return feature_dim_; }
  int num_classes() const { return static_cast<int>(priors_.size()); }
  Eigen::Index encoded_dim() const { return measurement_.dim(); }
  const std::vector<double>& priors() const { return priors_; }
  const std::vector<DensityMatrix>& centroids() const { return centroids_; }
  const Measurement& measurement() const { return measurement_; }

  /// Success probability of the stored measurement on the training ensemble:
  /// the Helstrom bound for binary models, the PGM bound otherwise.
  double training_bound() const { return training_bound_; }

  /// PGM models only: true when the average state sigma was full rank, in
  /// which case the kernel completion of the effects is zero.
  std::optional<bool> full_rank_sigma() const { return full_rank_sigma_; }

 private:
  ClassifierKind kind_;
  int copies_;
  int feature_dim_;
  std::vector<double> priors_;
  std::vector<DensityMatrix> centroids_;
  Measurement measurement_;
  double training_bound_ = 0.0;
  std::optional<bool> full_rank_sigma_;
};

/// Class scores for one input. label is the smallest class index attaining
/// the maximal score. For Helstrom models scores are the outcome
/// probabilities (tr(P+ rho), tr(P- rho)) and probabilities == scores; for
/// PGM models scores are p_i tr(F_i rho) (the decision rule) while
/// probabilities are the prior-free outcome probabilities tr(F_i rho),
/// which sum to one.
struct Prediction {
  int label = 0;
  std::vector<double> scores;
  std::vector<double> probabilities;
};

/// Builds centroids at the given copy count and derives the measurement.
/// Helstrom requires exactly two classes.
TrainedModel train(const Dataset& ds, ClassifierKind kind, int copies,
                   std::size_t dim_cap = kDefaultDimensionCap);

/// Encodes x with the model's copy count and scores it.
Prediction predict(const TrainedModel& model, const FeatureVector& x);

/// Scores an already-encoded state of the model's dimension.
Prediction predict_state(const TrainedModel& model, const DensityMatrix& rho);

/// Confusion matrix and summary metrics of the model on a labeled dataset
/// with the same feature dimension and class count.
MetricsReport evaluate(const TrainedModel& model, const Dataset& test);

}  // namespace qsd
