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

#include "qsd/hermitian.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

namespace qsd {

namespace {

// PSD acceptance gate: spectra of nominally PSD inputs may undershoot zero
// from round-off that scales with the matrix norm, so the absolute floor is
// widened for large-norm inputs.
double psd_gate(const HermitianMatrix& a, double max_abs_eig) {
  const double rel = static_cast<double>(a.dim()) *
                     std::numeric_limits<double>::epsilon() * max_abs_eig;
  return std::max(tol::kDensityEigenvalue, rel);
}

Matrix rebuild(const EigenDecomposition& ed, const Eigen::VectorXd& f) {
  return ed.eigenvectors * f.asDiagonal() * ed.eigenvectors.adjoint();
}

}  // namespace

HermitianMatrix::HermitianMatrix(Matrix entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    std::ostringstream os;
    os << "matrix is not square: " << entries_.rows() << "x"
       << entries_.cols();
    throw ShapeError(os.str());
  }
  if (entries_.rows() == 0) {
    throw ShapeError("matrix is empty");
  }
  double max_asym = 0.0;
  for (Eigen::Index j = 0; j < entries_.rows(); ++j) {
    for (Eigen::Index k = j; k < entries_.cols(); ++k) {
      const double asym =
          std::abs(entries_(j, k) - std::conj(entries_(k, j)));
      max_asym = std::max(max_asym, asym);
    }
  }
  if (max_asym > tol::kHermiticity) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |A(j,k) - conj(A(k,j))| = "
       << max_asym << " exceeds " << tol::kHermiticity;
    throw ValidationError(os.str());
  }
}

HermitianMatrix HermitianMatrix::symmetrized(Matrix m) {
  Matrix h = 0.5 * (m + m.adjoint());
  return HermitianMatrix(std::move(h), TrustedTag{});
}

HermitianMatrix HermitianMatrix::trusted(Matrix m) {
  return HermitianMatrix(std::move(m), TrustedTag{});
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index dim) {
  return HermitianMatrix(Matrix::Identity(dim, dim), TrustedTag{});
}

HermitianMatrix HermitianMatrix::zero(Eigen::Index dim) {
  return HermitianMatrix(Matrix::Zero(dim, dim), TrustedTag{});
}

DensityMatrix DensityMatrix::from_matrix(Matrix m) {
  HermitianMatrix h(std::move(m));
  const double tr = h.entries().trace().real();
  if (std::abs(tr - 1.0) > tol::kDensityTrace) {
    std::ostringstream os;
    os << "density matrix trace is " << tr << ", expected 1 within "
       << tol::kDensityTrace;
    throw ValidationError(os.str());
  }
  const EigenDecomposition ed = eig_hermitian(h);
  const double min_eig = ed.eigenvalues.minCoeff();
  if (min_eig < -tol::kDensityEigenvalue) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite: smallest eigenvalue "
       << min_eig << " is below -" << tol::kDensityEigenvalue;
    throw ValidationError(os.str());
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::trusted(Matrix m) {
  return DensityMatrix(HermitianMatrix::trusted(std::move(m)));
}

EigenDecomposition eig_hermitian(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.entries());
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigendecomposition did not converge");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

double default_rank_tolerance(const EigenDecomposition& ed) {
  const double max_abs = ed.eigenvalues.cwiseAbs().maxCoeff();
  return static_cast<double>(ed.eigenvalues.size()) * max_abs * tol::kRankRel;
}

HermitianMatrix psd_sqrt(const HermitianMatrix& a) {
  EigenDecomposition ed = eig_hermitian(a);
  const double gate = psd_gate(a, ed.eigenvalues.cwiseAbs().maxCoeff());
  Eigen::VectorXd roots(ed.eigenvalues.size());
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
    const double l = ed.eigenvalues[i];
    if (l < -gate) {
      std::ostringstream os;
      os << "psd_sqrt: matrix is not positive semidefinite, eigenvalue " << l
         << " is below -" << gate;
      throw ValidationError(os.str());
    }
    roots[i] = l > 0.0 ? std::sqrt(l) : 0.0;
  }
  return HermitianMatrix::symmetrized(rebuild(ed, roots));
}

HermitianMatrix pinv(const HermitianMatrix& a,
                     std::optional<double> rank_tol) {
  if (rank_tol && *rank_tol <= 0.0) {
    throw ValidationError("pinv: rank tolerance must be positive");
  }
  EigenDecomposition ed = eig_hermitian(a);
  const double cut = rank_tol.value_or(default_rank_tolerance(ed));
  Eigen::VectorXd inv(ed.eigenvalues.size());
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
    const double l = ed.eigenvalues[i];
    inv[i] = std::abs(l) > cut ? 1.0 / l : 0.0;
  }
  return HermitianMatrix::symmetrized(rebuild(ed, inv));
}

HermitianMatrix projector_image(const HermitianMatrix& a,
                                std::optional<double> rank_tol) {
  if (rank_tol && *rank_tol <= 0.0) {
    throw ValidationError("projector_image: rank tolerance must be positive");
  }
  EigenDecomposition ed = eig_hermitian(a);
  const double max_abs = ed.eigenvalues.cwiseAbs().maxCoeff();
  const double min_eig = ed.eigenvalues.minCoeff();
  if (min_eig < -psd_gate(a, max_abs)) {
    std::ostringstream os;
    os << "projector_image: matrix is not positive semidefinite, eigenvalue "
       << min_eig;
    throw ValidationError(os.str());
  }
  const double cut = rank_tol.value_or(default_rank_tolerance(ed));
  Eigen::VectorXd mask(ed.eigenvalues.size());
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
    mask[i] = ed.eigenvalues[i] > cut ? 1.0 : 0.0;
  }
  return HermitianMatrix::symmetrized(rebuild(ed, mask));
}

HermitianMatrix projector_kernel(const HermitianMatrix& a,
                                 std::optional<double> rank_tol) {
  const HermitianMatrix image = projector_image(a, rank_tol);
  Matrix k = Matrix::Identity(a.dim(), a.dim()) - image.entries();
  return HermitianMatrix::trusted(std::move(k));
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b,
                     std::size_t dim_cap) {
  const std::size_t out_dim =
      static_cast<std::size_t>(a.dim()) * static_cast<std::size_t>(b.dim());
  if (out_dim > dim_cap) {
    std::ostringstream os;
    os << "kron: result dimension " << out_dim << " exceeds the dimension cap "
       << dim_cap;
    throw CapacityError(os.str());
  }
  Matrix k = Eigen::kroneckerProduct(a.entries(), b.entries());
  return HermitianMatrix::trusted(std::move(k));
}

HermitianMatrix partial_trace_first(const HermitianMatrix& a,
                                    Eigen::Index dim_first) {
  if (dim_first < 1 || a.dim() % dim_first != 0) {
    std::ostringstream os;
    os << "partial_trace_first: dimension " << a.dim()
       << " is not divisible by the first factor dimension " << dim_first;
    throw ShapeError(os.str());
  }
  const Eigen::Index rest = a.dim() / dim_first;
  Matrix out = Matrix::Zero(rest, rest);
  for (Eigen::Index j = 0; j < dim_first; ++j) {
    out += a.entries().block(j * rest, j * rest, rest, rest);
  }
  return HermitianMatrix::trusted(std::move(out));
}

double trace_norm(const HermitianMatrix& a) {
  return eig_hermitian(a).eigenvalues.cwiseAbs().sum();
}

Complex trace_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("trace_product: dimension mismatch");
  }
  return a.transpose().cwiseProduct(b).sum();
}

double outcome_probability(const HermitianMatrix& effect,
                           const DensityMatrix& rho) {
  return trace_product(effect.entries(), rho.mat()).real();
}

}  // namespace qsd
