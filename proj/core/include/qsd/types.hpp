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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qsd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Tolerances used by validation and by the numerical kernels. Values are the
// contracts the rest of the library (and its tests) rely on; do not loosen
// them to make a failing computation pass.
namespace tol {

// Max |A(j,k) - conj(A(k,j))| accepted when validating a Hermitian matrix.
inline constexpr double kHermiticity = 1e-12;

// Eigenvalues of a density matrix may undershoot zero by this much.
inline constexpr double kDensityEigenvalue = 1e-10;

// |tr(rho) - 1| accepted for a density matrix.
inline constexpr double kDensityTrace = 1e-10;

// Effect spectra live in [-kEffectEigenvalue, 1 + kEffectEigenvalue].
inline constexpr double kEffectEigenvalue = 1e-9;

// Max entry of |sum of effects - identity| for a valid measurement.
inline constexpr double kMeasurementCompleteness = 1e-9;

// |sum of priors - 1| accepted for an ensemble.
inline constexpr double kPriorSum = 1e-10;

// Eigenvalues of the Helstrom observable above this go into P+.
inline constexpr double kHelstromEigenvalue = 1e-10;

// Relative rank threshold: eigenvalues with |l| <= dim * max|l| * kRankRel
// are treated as zero by the pseudoinverse and the image/kernel projectors.
inline constexpr double kRankRel = 1e-12;

// tr(P_ker(sigma)) below this marks the average state as full rank.
inline constexpr double kFullRankSigma = 1e-9;

}  // namespace tol

// Default cap on matrix dimension, (d+1)^n for encoded states. Keeps dense
// eigendecompositions at interactive speed; configurable per call.
inline constexpr std::size_t kDefaultDimensionCap = 4096;

}  // namespace qsd
