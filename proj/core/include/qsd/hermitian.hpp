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

#include <cstddef>
#include <optional>

#include "qsd/errors.hpp"
#include "qsd/types.hpp"

namespace qsd {

/// Dense complex Hermitian matrix. The checked constructor validates
/// conjugate symmetry entrywise; the factory helpers cover values that are
/// Hermitian by construction and skip the scan.
class HermitianMatrix {
 public:
  /// Validates squareness and Hermiticity (tol::kHermiticity); the error
  /// message names the largest asymmetry found.
  explicit HermitianMatrix(Matrix entries);

  /// Wraps (m + m†)/2, which is Hermitian exactly. Use for products such as
  /// V diag(f) V† whose round-off breaks symmetry at the last few ulps.
  static HermitianMatrix symmetrized(Matrix m);

  /// Wraps without validation. The caller guarantees Hermiticity; meant for
  /// values that are conjugate-symmetric bit for bit (sums, Kronecker
  /// products and diagonal blocks of Hermitian inputs).
  static HermitianMatrix trusted(Matrix m);

  static HermitianMatrix identity(Eigen::Index dim);
  static HermitianMatrix zero(Eigen::Index dim);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }

 private:
  struct TrustedTag {};
  HermitianMatrix(Matrix entries, TrustedTag) : entries_(std::move(entries)) {}

  Matrix entries_;
};

/// Hermitian, positive-semidefinite, unit-trace matrix: a quantum state.
class DensityMatrix {
 public:
  /// Full validation: Hermiticity, |tr - 1| <= tol::kDensityTrace, and all
  /// eigenvalues >= -tol::kDensityEigenvalue.
  static DensityMatrix from_matrix(Matrix m);

  /// No validation; the caller guarantees the invariants hold by
  /// construction (pure-state outer products, convex combinations and
  /// Kronecker products of density matrices).
  static DensityMatrix trusted(Matrix m);

  const HermitianMatrix& hermitian() const { return h_; }
  const Matrix& mat() const { return h_.entries(); }
  Eigen::Index dim() const { return h_.dim(); }

 private:
  explicit DensityMatrix(HermitianMatrix h) : h_(std::move(h)) {}

  HermitianMatrix h_;
};

/// A = V diag(eigenvalues) V†, eigenvalues real ascending, V unitary with
/// eigenvectors as columns.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

/// Eigendecomposition of a Hermitian matrix; eigenvalues ascending.
EigenDecomposition eig_hermitian(const HermitianMatrix& a);

/// Rank threshold dim * max|eigenvalue| * tol::kRankRel used by pinv and
/// the projectors when no explicit tolerance is given.
double default_rank_tolerance(const EigenDecomposition& ed);

/// Unique PSD square root. Eigenvalues in [-gate, 0) are clamped to zero
/// first, where gate = max(tol::kDensityEigenvalue, dim * eps * max|l|);
/// anything more negative is rejected as not PSD.
HermitianMatrix psd_sqrt(const HermitianMatrix& a);

/// Moore-Penrose pseudoinverse. Eigenvalues with |l| <= rank_tol are treated
/// as zero; the rest are inverted.
HermitianMatrix pinv(const HermitianMatrix& a,
                     std::optional<double> rank_tol = std::nullopt);

/// Projection onto the image (column span) of a PSD matrix.
HermitianMatrix projector_image(const HermitianMatrix& a,
                                std::optional<double> rank_tol = std::nullopt);

/// Projection onto the kernel of a PSD matrix: identity - projector_image.
HermitianMatrix projector_kernel(const HermitianMatrix& a,
                                 std::optional<double> rank_tol = std::nullopt);

/// Kronecker product. Throws CapacityError when dim(a)*dim(b) exceeds the cap.
HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b,
                     std::size_t dim_cap = kDefaultDimensionCap);

/// Trace over the first tensor factor of dimension dim_first; the result has
/// dimension dim(a)/dim_first. dim_first must divide dim(a).
HermitianMatrix partial_trace_first(const HermitianMatrix& a,
                                    Eigen::Index dim_first);

/// Sum of absolute eigenvalues.
double trace_norm(const HermitianMatrix& a);

/// tr(a b) in O(dim^2). For Hermitian a and b the result is real up to
/// round-off.
Complex trace_product(const Matrix& a, const Matrix& b);

/// Re tr(effect rho), the outcome probability of an effect on a state.
double outcome_probability(const HermitianMatrix& effect,
                           const DensityMatrix& rho);

}  // namespace qsd
