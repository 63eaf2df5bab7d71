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

#include <vector>

#include "qsd/hermitian.hpp"

namespace qsd {

/// One hypothesis of a discrimination problem: a state and its prior.
struct WeightedState {
  double prior = 0.0;
  DensityMatrix state;
};

/// Discrimination problem instance: at least two equal-dimension states whose
/// priors are strictly positive and sum to one.
class Ensemble {
 public:
  explicit Ensemble(std::vector<WeightedState> entries);

  const std::vector<WeightedState>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Eigen::Index dim() const { return entries_.front().state.dim(); }

  /// Prior-weighted average state sigma.
  DensityMatrix average_state() const;

 private:
  std::vector<WeightedState> entries_;
};

/// Finite collection of effects (0 <= E <= I) summing to the identity, one
/// per outcome.
class Measurement {
 public:
  /// Full validation: per-effect spectrum within
  /// [-tol::kEffectEigenvalue, 1 + tol::kEffectEigenvalue] and completeness
  /// within tol::kMeasurementCompleteness.
  explicit Measurement(std::vector<HermitianMatrix> effects);

  /// Checks completeness only; for effects that satisfy 0 <= E <= I by
  /// construction (spectral projectors, PGM effects).
  static Measurement trusted(std::vector<HermitianMatrix> effects);

  const std::vector<HermitianMatrix>& effects() const { return effects_; }
  std::size_t size() const { return effects_.size(); }
  Eigen::Index dim() const { return effects_.front().dim(); }

 private:
  struct TrustedTag {};
  Measurement(std::vector<HermitianMatrix> effects, TrustedTag);

  std::vector<HermitianMatrix> effects_;
};

/// Output of the binary optimal measurement: the projective measurement
/// {P+, P-}, the observable Lambda = p1 rho1 - p2 rho2, and the optimal
/// success probability.
struct HelstromResult {
  Measurement measurement;
  HermitianMatrix observable;
  double bound = 0.0;
};

/// Optimal binary discrimination. P+ collects the eigenprojectors of Lambda
/// with eigenvalue > eig_tol; P- is the complement (zero eigenvalues land in
/// P-, which leaves the bound unchanged and keeps P+ + P- = I exact).
HelstromResult helstrom(const DensityMatrix& rho1, const DensityMatrix& rho2,
                        double p1, double p2,
                        double eig_tol = tol::kHelstromEigenvalue);

/// (1 + trace_norm(p1 rho1 - p2 rho2)) / 2; agrees with helstrom(...).bound.
double helstrom_bound_trace_form(const DensityMatrix& rho1,
                                 const DensityMatrix& rho2, double p1,
                                 double p2);

/// Pretty Good measurement of an ensemble together with its building blocks:
/// the raw effects E_i = S p_i rho_i S with S the PSD square root of the
/// pseudoinverse of sigma, the kernel projector of sigma, and the completed
/// effects F_i = E_i + P_ker / l.
struct PgmResult {
  Measurement measurement;
  std::vector<HermitianMatrix> raw_effects;
  HermitianMatrix kernel_projector;
  bool full_rank_sigma = false;
};

PgmResult pgm_with_details(const Ensemble& r);

/// The completed PGM effects F_i, in class order.
Measurement pgm(const Ensemble& r);

/// sum_i p_i tr(M_i rho_i); the probability that the measurement identifies
/// the drawn state.
double success_probability(const Ensemble& r, const Measurement& m);

/// Success probability of the PGM on its own ensemble.
double pgm_bound(const Ensemble& r);

}  // namespace qsd
