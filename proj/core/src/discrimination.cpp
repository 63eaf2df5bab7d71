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

#include "qsd/discrimination.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qsd {

namespace {

void check_priors_pair(double p1, double p2) {
  if (!(p1 > 0.0) || !(p2 > 0.0)) {
    throw ValidationError("priors must be strictly positive");
  }
  if (std::abs(p1 + p2 - 1.0) > tol::kPriorSum) {
    std::ostringstream os;
    os << "priors sum to " << p1 + p2 << ", expected 1 within "
       << tol::kPriorSum;
    throw ValidationError(os.str());
  }
}

}  // namespace

Ensemble::Ensemble(std::vector<WeightedState> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw ValidationError("an ensemble needs at least 2 states");
  }
  const Eigen::Index dim = entries_.front().state.dim();
  double prior_sum = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].state.dim() != dim) {
      throw ShapeError("ensemble states have mismatched dimensions");
    }
    if (!(entries_[i].prior > 0.0)) {
      std::ostringstream os;
      os << "prior of state " << i + 1 << " is " << entries_[i].prior
         << "; priors must be strictly positive";
      throw ValidationError(os.str());
    }
    prior_sum += entries_[i].prior;
  }
  if (std::abs(prior_sum - 1.0) > tol::kPriorSum) {
    std::ostringstream os;
    os << "priors sum to " << prior_sum << ", expected 1 within "
       << tol::kPriorSum;
    throw ValidationError(os.str());
  }
}

DensityMatrix Ensemble::average_state() const {
  Matrix sigma = Matrix::Zero(dim(), dim());
  for (const WeightedState& e : entries_) {
    sigma += e.prior * e.state.mat();
  }
  return DensityMatrix::trusted(std::move(sigma));
}

Measurement::Measurement(std::vector<HermitianMatrix> effects, TrustedTag)
    : effects_(std::move(effects)) {
  if (effects_.empty()) {
    throw ValidationError("a measurement needs at least one effect");
  }
  const Eigen::Index dim = effects_.front().dim();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const HermitianMatrix& e : effects_) {
    if (e.dim() != dim) {
      throw ShapeError("measurement effects have mismatched dimensions");
    }
    sum += e.entries();
  }
  const double defect =
      (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (defect > tol::kMeasurementCompleteness) {
    std::ostringstream os;
    os << "effects do not sum to the identity: max deviation " << defect;
    throw ValidationError(os.str());
  }
}

Measurement::Measurement(std::vector<HermitianMatrix> effects)
    : Measurement(std::move(effects), TrustedTag{}) {
  for (std::size_t i = 0; i < effects_.size(); ++i) {
    const EigenDecomposition ed = eig_hermitian(effects_[i]);
    const double lo = ed.eigenvalues.minCoeff();
    const double hi = ed.eigenvalues.maxCoeff();
    if (lo < -tol::kEffectEigenvalue || hi > 1.0 + tol::kEffectEigenvalue) {
      std::ostringstream os;
      os << "effect " << i + 1 << " has spectrum [" << lo << ", " << hi
         << "] outside [0, 1]";
      throw ValidationError(os.str());
    }
  }
}

Measurement Measurement::trusted(std::vector<HermitianMatrix> effects) {
  return Measurement(std::move(effects), TrustedTag{});
}

HelstromResult helstrom(const DensityMatrix& rho1, const DensityMatrix& rho2,
                        double p1, double p2, double eig_tol) {
  check_priors_pair(p1, p2);
  if (rho1.dim() != rho2.dim()) {
    throw ShapeError("helstrom: states have mismatched dimensions");
  }
  // Subtraction of Hermitian matrices keeps conjugate symmetry exactly.
  HermitianMatrix observable =
      HermitianMatrix::trusted(p1 * rho1.mat() - p2 * rho2.mat());
  const EigenDecomposition ed = eig_hermitian(observable);

  Eigen::Index first_positive = ed.eigenvalues.size();
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
    if (ed.eigenvalues[i] > eig_tol) {
      first_positive = i;
      break;
    }
  }
  const Eigen::Index dim = observable.dim();
  const Eigen::Index n_pos = ed.eigenvalues.size() - first_positive;
  HermitianMatrix plus =
      n_pos == 0 ? HermitianMatrix::zero(dim)
                 : HermitianMatrix::symmetrized(
                       ed.eigenvectors.rightCols(n_pos) *
                       ed.eigenvectors.rightCols(n_pos).adjoint());
  HermitianMatrix minus = HermitianMatrix::trusted(
      Matrix::Identity(dim, dim) - plus.entries());
  const double bound =
      p1 * outcome_probability(plus, rho1) + p2 * outcome_probability(minus, rho2);

  std::vector<HermitianMatrix> effects;
  effects.push_back(std::move(plus));
  effects.push_back(std::move(minus));
  return HelstromResult{Measurement::trusted(std::move(effects)),
                        std::move(observable), bound};
}

double helstrom_bound_trace_form(const DensityMatrix& rho1,
                                 const DensityMatrix& rho2, double p1,
                                 double p2) {
  check_priors_pair(p1, p2);
  if (rho1.dim() != rho2.dim()) {
    throw ShapeError("helstrom: states have mismatched dimensions");
  }
  const HermitianMatrix lambda =
      HermitianMatrix::trusted(p1 * rho1.mat() - p2 * rho2.mat());
  return 0.5 * (1.0 + trace_norm(lambda));
}

PgmResult pgm_with_details(const Ensemble& r) {
  const DensityMatrix sigma = r.average_state();
  // One decomposition of sigma supplies both the square root of the
  // pseudoinverse and the kernel projector, so the rank decision is shared.
  const EigenDecomposition ed = eig_hermitian(sigma.hermitian());
  const double cut = default_rank_tolerance(ed);

  const Eigen::Index dim = sigma.dim();
  Eigen::VectorXd inv_roots(dim);
  Eigen::VectorXd kernel_mask(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double l = ed.eigenvalues[i];
    if (l > cut) {
      inv_roots[i] = 1.0 / std::sqrt(l);
      kernel_mask[i] = 0.0;
    } else {
      inv_roots[i] = 0.0;
      kernel_mask[i] = 1.0;
    }
  }
  const Matrix s =
      ed.eigenvectors * inv_roots.asDiagonal() * ed.eigenvectors.adjoint();
  const Matrix p_ker =
      ed.eigenvectors * kernel_mask.asDiagonal() * ed.eigenvectors.adjoint();
  HermitianMatrix kernel_projector = HermitianMatrix::symmetrized(p_ker);

  const double ell = static_cast<double>(r.size());
  const Matrix kernel_share = kernel_projector.entries() / ell;

  std::vector<HermitianMatrix> raw;
  std::vector<HermitianMatrix> completed;
  raw.reserve(r.size());
  completed.reserve(r.size());
  for (const WeightedState& e : r.entries()) {
    HermitianMatrix raw_effect =
        HermitianMatrix::symmetrized(s * (e.prior * e.state.mat()) * s);
    completed.push_back(
        HermitianMatrix::trusted(raw_effect.entries() + kernel_share));
    raw.push_back(std::move(raw_effect));
  }

  const bool full_rank =
      kernel_projector.entries().trace().real() < tol::kFullRankSigma;
  return PgmResult{Measurement::trusted(std::move(completed)), std::move(raw),
                   std::move(kernel_projector), full_rank};
}

Measurement pgm(const Ensemble& r) { return pgm_with_details(r).measurement; }

double success_probability(const Ensemble& r, const Measurement& m) {
  if (r.size() != m.size()) {
    std::ostringstream os;
    os << "ensemble has " << r.size() << " states but the measurement has "
       << m.size() << " effects";
    throw ShapeError(os.str());
  }
  if (r.dim() != m.dim()) {
    throw ShapeError("ensemble and measurement dimensions differ");
  }
  double p = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    p += r.entries()[i].prior *
         outcome_probability(m.effects()[i], r.entries()[i].state);
  }
  return p;
}

double pgm_bound(const Ensemble& r) {
  return success_probability(r, pgm(r));
}

}  // namespace qsd
