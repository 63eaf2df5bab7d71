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

#include "qsd/classify.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qsd {

std::string_view classifier_kind_name(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kHelstrom:
      return "helstrom";
    case ClassifierKind::kPgm:
      return "pgm";
  }
  return "unknown";
}

std::optional<ClassifierKind> classifier_kind_from_name(
    std::string_view name) {
  if (name == "helstrom") {
    return ClassifierKind::kHelstrom;
  }
  if (name == "pgm") {
    return ClassifierKind::kPgm;
  }
  return std::nullopt;
}

namespace {

Ensemble training_ensemble(const std::vector<double>& priors,
                           const std::vector<DensityMatrix>& centroids) {
  std::vector<WeightedState> entries;
  entries.reserve(priors.size());
  for (std::size_t i = 0; i < priors.size(); ++i) {
    entries.push_back(WeightedState{priors[i], centroids[i]});
  }
  return Ensemble(std::move(entries));
}

}  // namespace

TrainedModel::TrainedModel(ClassifierKind kind, int copies, int feature_dim,
                           std::vector<double> priors,
                           std::vector<DensityMatrix> centroids,
                           Measurement measurement)
    : kind_(kind),
      copies_(copies),
      feature_dim_(feature_dim),
      priors_(std::move(priors)),
      centroids_(std::move(centroids)),
      measurement_(std::move(measurement)) {
  if (copies_ < 1) {
    throw ValidationError("model copies must be at least 1");
  }
  if (feature_dim_ < 1) {
    throw ValidationError("model feature dimension must be at least 1");
  }
  const std::size_t ell = priors_.size();
  if (ell < 2) {
    throw ValidationError("a model needs at least 2 classes");
  }
  if (kind_ == ClassifierKind::kHelstrom && ell != 2) {
    std::ostringstream os;
    os << "the helstrom classifier is binary; got " << ell << " classes";
    throw ValidationError(os.str());
  }
  if (centroids_.size() != ell || measurement_.size() != ell) {
    throw ShapeError("priors, centroids and measurement arity must match");
  }
  double prior_sum = 0.0;
  for (double p : priors_) {
    if (!(p > 0.0)) {
      throw ValidationError("model priors must be strictly positive");
    }
    prior_sum += p;
  }
  if (std::abs(prior_sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "model priors sum to " << prior_sum << ", expected 1 within 1e-12";
    throw ValidationError(os.str());
  }
  const Eigen::Index expected_dim = static_cast<Eigen::Index>(encoded_dimension(
      feature_dim_, copies_, static_cast<std::size_t>(1) << 62));
  for (const DensityMatrix& c : centroids_) {
    if (c.dim() != expected_dim) {
      throw ShapeError("centroid dimension does not match (d+1)^copies");
    }
  }
  if (measurement_.dim() != expected_dim) {
    throw ShapeError("measurement dimension does not match (d+1)^copies");
  }

  const Ensemble ensemble = training_ensemble(priors_, centroids_);
  training_bound_ = success_probability(ensemble, measurement_);
  if (kind_ == ClassifierKind::kPgm) {
    full_rank_sigma_ =
        projector_kernel(ensemble.average_state().hermitian())
            .entries()
            .trace()
            .real() < tol::kFullRankSigma;
  }
}

TrainedModel train(const Dataset& ds, ClassifierKind kind, int copies,
                   std::size_t dim_cap) {
  if (kind == ClassifierKind::kHelstrom && ds.num_classes() != 2) {
    std::ostringstream os;
    os << "the helstrom classifier is binary; the dataset has "
       << ds.num_classes() << " classes";
    throw ValidationError(os.str());
  }
  std::vector<ClassCentroid> cc = class_centroids(ds, copies, dim_cap);
  std::vector<double> priors;
  std::vector<DensityMatrix> centroids;
  priors.reserve(cc.size());
  centroids.reserve(cc.size());
  for (ClassCentroid& c : cc) {
    priors.push_back(c.prior);
    centroids.push_back(std::move(c.centroid));
  }

  Measurement measurement = [&] {
    if (kind == ClassifierKind::kHelstrom) {
      return helstrom(centroids[0], centroids[1], priors[0], priors[1])
          .measurement;
    }
    return pgm(training_ensemble(priors, centroids));
  }();

  return TrainedModel(kind, copies, ds.feature_dim(), std::move(priors),
                      std::move(centroids), std::move(measurement));
}

Prediction predict_state(const TrainedModel& model, const DensityMatrix& rho) {
  if (rho.dim() != model.encoded_dim()) {
    std::ostringstream os;
    os << "state dimension " << rho.dim() << " does not match the model's "
       << model.encoded_dim();
    throw ShapeError(os.str());
  }
  const std::size_t ell = model.measurement().size();
  Prediction out;
  out.scores.resize(ell);
  out.probabilities.resize(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    const double p = outcome_probability(model.measurement().effects()[i], rho);
    out.probabilities[i] = p;
    out.scores[i] =
        model.kind() == ClassifierKind::kPgm ? model.priors()[i] * p : p;
  }
  // Smallest index attaining the maximum; the binary ">=" rule is the same
  // convention.
  int best = 0;
  for (std::size_t i = 1; i < ell; ++i) {
    if (out.scores[i] > out.scores[static_cast<std::size_t>(best)]) {
      best = static_cast<int>(i);
    }
  }
  out.label = best + 1;
  return out;
}

Prediction predict(const TrainedModel& model, const FeatureVector& x) {
  if (static_cast<int>(x.values.size()) != model.feature_dim()) {
    std::ostringstream os;
    os << "input has " << x.values.size() << " features, the model expects "
       << model.feature_dim();
    throw ShapeError(os.str());
  }
  return predict_state(model, encode_copies(x, model.copies(),
                                            static_cast<std::size_t>(
                                                model.encoded_dim())));
}

MetricsReport evaluate(const TrainedModel& model, const Dataset& test) {
  if (test.feature_dim() != model.feature_dim()) {
    throw ShapeError("test set feature dimension does not match the model");
  }
  if (test.num_classes() != model.num_classes()) {
    std::ostringstream os;
    os << "test set has " << test.num_classes() << " classes, the model has "
       << model.num_classes();
    throw DataError(os.str());
  }
  Eigen::MatrixXi confusion =
      Eigen::MatrixXi::Zero(model.num_classes(), model.num_classes());
  for (const FeatureVector& p : test.points()) {
    const Prediction pred = predict(model, p);
    confusion(*p.label - 1, pred.label - 1) += 1;
  }
  return metrics_from_confusion(std::move(confusion));
}

}  // namespace qsd
