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

#include "qsd/encoding.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qsd {

namespace {

// Normalized amplitude vector [x_1, ..., x_d, 1] / sqrt(sum x^2 + 1).
Eigen::VectorXd amplitude_vector(std::span<const double> values) {
  if (values.empty()) {
    throw EncodingError("cannot encode an empty feature vector");
  }
  double sq = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      std::ostringstream os;
      os << "feature " << i + 1 << " is not finite";
      throw EncodingError(os.str());
    }
    sq += values[i] * values[i];
  }
  const double inv_norm = 1.0 / std::sqrt(sq);
  Eigen::VectorXd v(values.size() + 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = values[i] * inv_norm;
  }
  v[v.size() - 1] = inv_norm;
  return v;
}

}  // namespace

Dataset::Dataset(std::vector<FeatureVector> points, int num_classes,
                 std::vector<std::string> class_names)
    : points_(std::move(points)),
      num_classes_(num_classes),
      class_names_(std::move(class_names)) {
  if (num_classes_ < 2) {
    throw DataError("a dataset needs at least 2 classes");
  }
  if (points_.empty()) {
    throw DataError("a dataset needs at least one point");
  }
  if (!class_names_.empty() &&
      class_names_.size() != static_cast<std::size_t>(num_classes_)) {
    throw DataError("class_names size does not match the number of classes");
  }
  feature_dim_ = static_cast<int>(points_.front().values.size());
  if (feature_dim_ < 1) {
    throw DataError("points need at least one feature");
  }
  class_counts_.assign(static_cast<std::size_t>(num_classes_), 0);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const FeatureVector& p = points_[i];
    if (!p.label) {
      std::ostringstream os;
      os << "point " << i + 1 << " has no class label";
      throw DataError(os.str());
    }
    if (*p.label < 1 || *p.label > num_classes_) {
      std::ostringstream os;
      os << "point " << i + 1 << " has label " << *p.label
         << " outside 1.." << num_classes_;
      throw DataError(os.str());
    }
    if (static_cast<int>(p.values.size()) != feature_dim_) {
      std::ostringstream os;
      os << "point " << i + 1 << " has " << p.values.size()
         << " features, expected " << feature_dim_;
      throw DataError(os.str());
    }
    for (std::size_t f = 0; f < p.values.size(); ++f) {
      if (!std::isfinite(p.values[f])) {
        std::ostringstream os;
        os << "point " << i + 1 << ", feature " << f + 1 << " is not finite";
        throw DataError(os.str());
      }
    }
    ++class_counts_[static_cast<std::size_t>(*p.label - 1)];
  }
  for (int c = 1; c <= num_classes_; ++c) {
    if (class_counts_[static_cast<std::size_t>(c - 1)] == 0) {
      std::ostringstream os;
      os << "class " << c << " has no points";
      throw DataError(os.str());
    }
  }
}

std::size_t encoded_dimension(int feature_dim, int copies,
                              std::size_t dim_cap) {
  if (copies < 1) {
    throw ValidationError("the number of copies must be at least 1");
  }
  const std::size_t base = static_cast<std::size_t>(feature_dim) + 1;
  std::size_t dim = 1;
  for (int i = 0; i < copies; ++i) {
    if (dim > dim_cap / base) {
      std::ostringstream os;
      os << "encoded dimension (" << base << ")^" << copies
         << " exceeds the dimension cap " << dim_cap;
      throw CapacityError(os.str());
    }
    dim *= base;
  }
  if (dim > dim_cap) {
    std::ostringstream os;
    os << "encoded dimension " << dim << " exceeds the dimension cap "
       << dim_cap;
    throw CapacityError(os.str());
  }
  return dim;
}

DensityMatrix amplitude_encode(std::span<const double> values) {
  const Eigen::VectorXd v = amplitude_vector(values);
  Matrix rho = (v * v.transpose()).cast<Complex>();
  return DensityMatrix::trusted(std::move(rho));
}

DensityMatrix amplitude_encode(const FeatureVector& x) {
  return amplitude_encode(std::span<const double>(x.values));
}

DensityMatrix encode_copies(std::span<const double> values, int copies,
                            std::size_t dim_cap) {
  encoded_dimension(static_cast<int>(values.size()), copies, dim_cap);
  const Eigen::VectorXd v = amplitude_vector(values);
  // Kronecker power of the amplitude vector, then one outer product; the
  // result equals the Kronecker power of the single-copy state.
  Eigen::VectorXd w = v;
  for (int i = 1; i < copies; ++i) {
    Eigen::VectorXd next(w.size() * v.size());
    for (Eigen::Index j = 0; j < w.size(); ++j) {
      next.segment(j * v.size(), v.size()) = w[j] * v;
    }
    w = std::move(next);
  }
  Matrix rho = (w * w.transpose()).cast<Complex>();
  return DensityMatrix::trusted(std::move(rho));
}

DensityMatrix encode_copies(const FeatureVector& x, int copies,
                            std::size_t dim_cap) {
  return encode_copies(std::span<const double>(x.values), copies, dim_cap);
}

QuantumDataset encode_dataset(const Dataset& ds, int copies,
                              std::size_t dim_cap) {
  QuantumDataset out;
  out.copies = copies;
  out.encoded_dim = static_cast<Eigen::Index>(
      encoded_dimension(ds.feature_dim(), copies, dim_cap));
  out.states.reserve(ds.size());
  out.labels.reserve(ds.size());
  for (const FeatureVector& p : ds.points()) {
    out.states.push_back(encode_copies(p, copies, dim_cap));
    out.labels.push_back(*p.label);
  }
  return out;
}

DensityMatrix quantum_centroid(std::span<const DensityMatrix> states) {
  if (states.empty()) {
    throw DataError("cannot form a centroid of an empty class");
  }
  const Eigen::Index dim = states.front().dim();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const DensityMatrix& s : states) {
    if (s.dim() != dim) {
      throw ShapeError("centroid states have mismatched dimensions");
    }
    sum += s.mat();
  }
  sum *= 1.0 / static_cast<double>(states.size());
  return DensityMatrix::trusted(std::move(sum));
}

std::vector<ClassCentroid> class_centroids(const Dataset& ds, int copies,
                                           std::size_t dim_cap) {
  const Eigen::Index dim = static_cast<Eigen::Index>(
      encoded_dimension(ds.feature_dim(), copies, dim_cap));
  const std::size_t m = ds.size();
  std::vector<Matrix> sums(static_cast<std::size_t>(ds.num_classes()),
                           Matrix::Zero(dim, dim));
  // Accumulate in ascending point order without materializing all encodings.
  for (const FeatureVector& p : ds.points()) {
    sums[static_cast<std::size_t>(*p.label - 1)] +=
        encode_copies(p, copies, dim_cap).mat();
  }
  std::vector<ClassCentroid> out;
  out.reserve(sums.size());
  for (std::size_t c = 0; c < sums.size(); ++c) {
    const double count = static_cast<double>(ds.class_counts()[c]);
    sums[c] *= 1.0 / count;
    out.push_back(ClassCentroid{count / static_cast<double>(m),
                                DensityMatrix::trusted(std::move(sums[c]))});
  }
  return out;
}

}  // namespace qsd
