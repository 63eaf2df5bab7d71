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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "qsd/encoding.hpp"
#include "support/oracles.hpp"
#include "support/random_states.hpp"

using namespace qsd;
namespace ts = qsd::testsupport;

namespace {

double max_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Dataset two_point_line() {
  return Dataset({FeatureVector{{0.0}, 1}, FeatureVector{{1.0}, 2}}, 2);
}

}  // namespace

TEST_SUITE_BEGIN("encoding");

TEST_CASE("amplitude encoding of fixed vectors") {
  Matrix rho = amplitude_encode(FeatureVector{{0.0}, {}}).mat();
  CHECK(rho(0, 0).real() == doctest::Approx(0.0));
  CHECK(rho(1, 1).real() == doctest::Approx(1.0));
  CHECK(rho(0, 1).real() == doctest::Approx(0.0));

  rho = amplitude_encode(FeatureVector{{1.0}, {}}).mat();
  for (Eigen::Index r = 0; r < 2; ++r) {
    for (Eigen::Index c = 0; c < 2; ++c) {
      CHECK(rho(r, c).real() == doctest::Approx(0.5));
    }
  }

  // norm^2 of (3, 4, 1) is 26
  rho = amplitude_encode(FeatureVector{{3.0, 4.0}, {}}).mat();
  CHECK(rho(0, 0).real() == doctest::Approx(9.0 / 26.0));
  CHECK(rho(1, 1).real() == doctest::Approx(16.0 / 26.0));
  CHECK(rho(2, 2).real() == doctest::Approx(1.0 / 26.0));
}

TEST_CASE("amplitude encoding input errors") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  try {
    amplitude_encode(FeatureVector{{1.0, nan, 2.0}, {}});
    FAIL("expected EncodingError");
  } catch (const EncodingError& e) {
    CHECK(std::string(e.what()).find("feature 2") != std::string::npos);
  }
  CHECK_THROWS_AS(amplitude_encode(FeatureVector{{inf}, {}}), EncodingError);
  CHECK_THROWS_AS(amplitude_encode(FeatureVector{{}, {}}), EncodingError);
}

TEST_CASE("encode_copies basics") {
  Rng rng(3);
  const FeatureVector x{{0.7, -1.2}, {}};
  CHECK(max_diff(encode_copies(x, 1).mat(), amplitude_encode(x).mat()) == 0.0);

  // [0] encodes to the last basis state; two copies land on index 3 of dim 4
  const Matrix rho = encode_copies(FeatureVector{{0.0}, {}}, 2).mat();
  CHECK(rho.rows() == 4);
  CHECK(rho(3, 3).real() == doctest::Approx(1.0));
  CHECK(rho.cwiseAbs().sum() == doctest::Approx(1.0));

  for (int n = 1; n <= 3; ++n) {
    FeatureVector v{{rng.uniform(-2, 2), rng.uniform(-2, 2)}, {}};
    const DensityMatrix enc = encode_copies(v, n);
    CHECK(std::abs(enc.mat().trace().real() - 1.0) < 1e-12);
    // purity
    const double purity = trace_product(enc.mat(), enc.mat()).real();
    CHECK(purity >= 1.0 - 1e-9);
  }
}

TEST_CASE("encode_copies matches the Kronecker power of the state") {
  Rng rng(5);
  const FeatureVector x{{rng.uniform(-1, 1), rng.uniform(-1, 1)}, {}};
  const Matrix one = amplitude_encode(x).mat();
  CHECK(max_diff(encode_copies(x, 3).mat(), ts::kron_power(one, 3)) < 1e-14);
}

TEST_CASE("encode_copies capacity") {
  const FeatureVector x{{1.0, 2.0}, {}};
  CHECK_THROWS_AS(encode_copies(x, 8), CapacityError);  // 3^8 > 4096
  try {
    encode_copies(x, 3, 16);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("27") != std::string::npos);
  }
  CHECK_THROWS_AS(encode_copies(x, 0), ValidationError);
}

TEST_CASE("quantum_centroid basics") {
  Matrix d1 = Matrix::Zero(2, 2);
  d1(0, 0) = 1.0;
  Matrix d2 = Matrix::Zero(2, 2);
  d2(1, 1) = 1.0;
  const DensityMatrix states[] = {DensityMatrix::trusted(d1),
                                  DensityMatrix::trusted(d2)};
  const Matrix c = quantum_centroid(states).mat();
  CHECK(c(0, 0).real() == doctest::Approx(0.5));
  CHECK(c(1, 1).real() == doctest::Approx(0.5));

  const DensityMatrix single[] = {DensityMatrix::trusted(d1)};
  CHECK(max_diff(quantum_centroid(single).mat(), d1) == 0.0);

  CHECK_THROWS_AS(quantum_centroid({}), DataError);
  Rng rng(7);
  const DensityMatrix mismatched[] = {ts::random_pure(rng, 2),
                                      ts::random_pure(rng, 3)};
  CHECK_THROWS_AS(quantum_centroid(mismatched), ShapeError);
}

TEST_CASE("the quantum centroid is not the encoding of the mean") {
  const DensityMatrix encodings[] = {amplitude_encode(FeatureVector{{0.0}, {}}),
                                     amplitude_encode(FeatureVector{{1.0}, {}})};
  const Matrix centroid = quantum_centroid(encodings).mat();
  const Matrix encoded_mean = amplitude_encode(FeatureVector{{0.5}, {}}).mat();
  CHECK(max_diff(centroid, encoded_mean) > 1e-6);
}

TEST_CASE("class_centroids priors and pure single-point classes") {
  const Dataset ds({FeatureVector{{0.0}, 1}, FeatureVector{{0.5}, 1},
                    FeatureVector{{1.0}, 1}, FeatureVector{{2.0}, 2}},
                   2);
  const auto cc = class_centroids(ds, 1);
  REQUIRE(cc.size() == 2);
  CHECK(cc[0].prior == doctest::Approx(0.75));
  CHECK(cc[1].prior == doctest::Approx(0.25));
  CHECK(std::abs(cc[0].prior + cc[1].prior - 1.0) < 1e-12);
  // a one-point class keeps its pure encoding
  CHECK(max_diff(cc[1].centroid.mat(),
                 amplitude_encode(FeatureVector{{2.0}, {}}).mat()) == 0.0);

  const Dataset one_each = two_point_line();
  const auto pure = class_centroids(one_each, 1);
  const double purity =
      trace_product(pure[0].centroid.mat(), pure[0].centroid.mat()).real();
  CHECK(purity == doctest::Approx(1.0));
}

TEST_CASE("tracing out one copy of the centroid recovers the lower level") {
  Rng rng(11);
  for (int it = 0; it < 10; ++it) {
    const Dataset ds = ts::random_dataset(rng, 2, 8, 2);
    for (int n = 1; n <= 2; ++n) {
      const auto lower = class_centroids(ds, n);
      const auto upper = class_centroids(ds, n + 1);
      for (std::size_t c = 0; c < lower.size(); ++c) {
        const HermitianMatrix traced = partial_trace_first(
            upper[c].centroid.hermitian(), ds.feature_dim() + 1);
        CHECK(max_diff(traced.entries(), lower[c].centroid.mat()) < 1e-12);
      }
    }
  }
}

TEST_CASE("multi-copy centroid is not a power of the single-copy centroid") {
  const Dataset ds({FeatureVector{{0.0}, 1}, FeatureVector{{1.0}, 1},
                    FeatureVector{{3.0}, 2}},
                   2);
  const auto one = class_centroids(ds, 1);
  const auto two = class_centroids(ds, 2);
  const Matrix power = ts::kron_power(one[0].centroid.mat(), 2);
  CHECK(max_diff(two[0].centroid.mat(), power) > 1e-9);
}

TEST_CASE("centroids are not translation invariant") {
  const Dataset base({FeatureVector{{0.0}, 1}, FeatureVector{{1.0}, 1},
                      FeatureVector{{4.0}, 2}},
                     2);
  const Dataset shifted({FeatureVector{{1.0}, 1}, FeatureVector{{2.0}, 1},
                         FeatureVector{{5.0}, 2}},
                        2);
  const auto a = class_centroids(base, 1);
  const auto b = class_centroids(shifted, 1);
  CHECK(max_diff(a[0].centroid.mat(), b[0].centroid.mat()) > 1e-9);
}

TEST_CASE("encoding and centroids are deterministic") {
  Rng rng(13);
  const Dataset ds = ts::random_dataset(rng, 3, 10, 3);
  const auto first = class_centroids(ds, 2);
  const auto second = class_centroids(ds, 2);
  for (std::size_t c = 0; c < first.size(); ++c) {
    CHECK(max_diff(first[c].centroid.mat(), second[c].centroid.mat()) == 0.0);
    CHECK(first[c].prior == second[c].prior);
  }
  const FeatureVector x{{0.3, -0.7, 1.9}, {}};
  CHECK(max_diff(encode_copies(x, 2).mat(), encode_copies(x, 2).mat()) == 0.0);
}

TEST_CASE("encode_dataset carries labels and dimension") {
  const Dataset ds = two_point_line();
  const QuantumDataset q = encode_dataset(ds, 2);
  CHECK(q.encoded_dim == 4);
  CHECK(q.states.size() == 2);
  CHECK(q.labels == std::vector<int>{1, 2});
  for (const DensityMatrix& s : q.states) {
    CHECK(s.dim() == 4);
    CHECK(trace_product(s.mat(), s.mat()).real() >= 1.0 - 1e-9);
  }
}

TEST_CASE("dataset validation") {
  using FV = FeatureVector;
  CHECK_THROWS_AS(Dataset({FV{{1.0}, 1}}, 1), DataError);              // 1 class
  CHECK_THROWS_AS(Dataset({FV{{1.0}, 1}, FV{{2.0}, 3}}, 2), DataError);  // bad label
  CHECK_THROWS_AS(Dataset({FV{{1.0}, 1}, FV{{2.0}, 1}}, 2), DataError);  // empty class
  CHECK_THROWS_AS(Dataset({FV{{1.0}, 1}, FV{{2.0, 3.0}, 2}}, 2),
                  DataError);  // mixed dims
  CHECK_THROWS_AS(Dataset({FV{{1.0}, {}}, FV{{2.0}, 2}}, 2),
                  DataError);  // unlabeled
  CHECK_THROWS_AS(Dataset({}, 2), DataError);
  const Dataset ok({FV{{1.0}, 1}, FV{{2.0}, 2}}, 2, {"a", "b"});
  CHECK(ok.class_counts() == std::vector<std::size_t>{1, 1});
  CHECK_THROWS_AS(Dataset({FV{{1.0}, 1}, FV{{2.0}, 2}}, 2, {"a"}), DataError);
}

TEST_SUITE_END();
