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
#include <span>
#include <string>
#include <vector>

#include "qsd/hermitian.hpp"

namespace qsd {

/// Real-valued object vector with an optional 1-based class label.
struct FeatureVector {
  std::vector<double> values;
  std::optional<int> label;
};

/// Labeled collection of feature vectors. Every point carries a label in
/// 1..num_classes, every class is nonempty, and all points share the same
/// feature dimension.
class Dataset {
 public:
  Dataset(std::vector<FeatureVector> points, int num_classes,
          std::vector<std::string> class_names = {});

  const std::vector<FeatureVector>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  int num_classes() const { return num_classes_; }
  int feature_dim() const { return feature_dim_; }

  /// Optional display names, one per class when present.
  const std::vector<std::string>& class_names() const { return class_names_; }

  /// Points per class, indexed by class - 1.
  const std::vector<std::size_t>& class_counts() const { return class_counts_; }

 private:
  std::vector<FeatureVector> points_;
  int num_classes_ = 0;
  int feature_dim_ = 0;
  std::vector<std::string> class_names_;
  std::vector<std::size_t> class_counts_;
};

/// Encoded dataset: one pure state per point, all of dimension
/// (feature_dim + 1)^copies.
struct QuantumDataset {
  std::vector<DensityMatrix> states;
  std::vector<int> labels;
  int copies = 1;
  Eigen::Index encoded_dim = 0;
};

/// Per-class prior (class frequency) and quantum centroid.
struct ClassCentroid {
  double prior = 0.0;
  DensityMatrix centroid;
};

/// Maps x in R^d to the pure state of dimension d+1 given by appending the
/// constant amplitude 1, normalizing, and taking the outer product.
DensityMatrix amplitude_encode(std::span<const double> values);
DensityMatrix amplitude_encode(const FeatureVector& x);

/// copies-fold Kronecker power of amplitude_encode(x); pure, dimension
/// (d+1)^copies. Throws CapacityError when that dimension exceeds dim_cap.
DensityMatrix encode_copies(std::span<const double> values, int copies,
                            std::size_t dim_cap = kDefaultDimensionCap);
DensityMatrix encode_copies(const FeatureVector& x, int copies,
                            std::size_t dim_cap = kDefaultDimensionCap);

QuantumDataset encode_dataset(const Dataset& ds, int copies,
                              std::size_t dim_cap = kDefaultDimensionCap);

/// Uniformly weighted convex combination of the given states. Summation runs
/// in ascending index order, so identical inputs give bit-identical results.
DensityMatrix quantum_centroid(std::span<const DensityMatrix> states);

/// Per-class priors |class| / m and copies-fold centroids, one entry per
/// class in ascending class order. Priors sum to 1.
std::vector<ClassCentroid> class_centroids(
    const Dataset& ds, int copies,
    std::size_t dim_cap = kDefaultDimensionCap);

/// Dimension (feature_dim + 1)^copies as a checked size, or CapacityError.
std::size_t encoded_dimension(int feature_dim, int copies,
                              std::size_t dim_cap);

}  // namespace qsd
