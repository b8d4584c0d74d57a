// Copyright 2026 The catlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace catlab::fock {

using Complex = std::complex<double>;

/// Smallest cutoff ever returned by choose_cutoff.
inline constexpr int kMinCutoff = 16;
/// Levels added above the Poisson-tail point.
inline constexpr int kCutoffPadding = 10;
/// Hard ceiling on any cutoff the policy will hand out.
inline constexpr int kMaxCutoff = 4096;
/// Constructors reject a cutoff whose Poisson tail exceeds this.
inline constexpr double kConstructorTailLimit = 1e-9;
/// Highest supported p + q in moment().
inline constexpr int kMaxMomentOrder = 8;

/// P(n >= from) for a Poisson law of the given mean, summed term by term.
double poisson_tail(double mean, int from);

/// Cutoff policy: smallest N with Poisson tail P(n >= N) < tail_tol, plus
/// kCutoffPadding levels, never below kMinCutoff.
///
/// Negative or NaN means are treated as 0; tail_tol is clamped into
/// [1e-300, 0.5]; the result is capped at kMaxCutoff.
int choose_cutoff(double mean_photon, double tail_tol = 1e-12);

/// Pure cavity state: amplitudes over |0>..|N_c-1>.
class FockVector {
 public:
  /// Takes the amplitudes as given; no normalization.
  explicit FockVector(Eigen::VectorXcd amplitudes);

  /// Rescales to unit norm and records 1 - (norm before) as the
  /// truncation deficit. Throws InvalidArgumentError for a zero vector.
  static FockVector normalized(Eigen::VectorXcd amplitudes);

  int cutoff() const { return static_cast<int>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](int n) const { return amplitudes_[n]; }

  double norm_squared() const { return amplitudes_.squaredNorm(); }
  /// Probability mass lost to truncation before renormalization.
  double truncation_deficit() const { return truncation_deficit_; }
  /// |amplitudes[N_c - 1]|^2.
  double tail_mass() const;

  /// Same state multiplied by exp(i * phase).
  FockVector with_global_phase(double phase) const;

 private:
  Eigen::VectorXcd amplitudes_;
  double truncation_deficit_ = 0.0;
};

/// Mixed cavity state: Hermitian, unit-trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Checks Hermiticity (1e-12), trace (1e-10) and the smallest
  /// eigenvalue (>= -1e-10); throws InvalidArgumentError otherwise.
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  int cutoff() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  double trace() const { return entries_.trace().real(); }
  double hermiticity_error() const;
  /// Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;
  double purity() const;

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, Eigen::MatrixXcd entries) : entries_(std::move(entries)) {}

  friend DensityMatrix density_from_pure(const FockVector& state);
  friend DensityMatrix mix(std::span<const double> weights, std::span<const FockVector> states);

  Eigen::MatrixXcd entries_;
};

/// <n|alpha> for n < cutoff with no truncation handling. Evaluated from a
/// log-space anchor at the Poisson peak and multiplicative recurrences
/// outward, so relative accuracy does not degrade with |alpha|.
Eigen::VectorXcd coherent_amplitudes(Complex alpha, int cutoff);

/// Normalized coherent state |alpha>. Throws CutoffError when the Poisson
/// tail at mean |alpha|^2 beyond the cutoff exceeds kConstructorTailLimit.
FockVector coherent_state(Complex alpha, int cutoff);

/// |n>. Throws RangeError unless 0 <= n < cutoff.
FockVector fock_state(int n, int cutoff);

/// D(beta)|k>, built from the Laguerre closed form of <n|beta,k>.
/// Same tail check as coherent_state at mean |beta|^2 + k.
FockVector displaced_number_state(Complex beta, int k, int cutoff);

/// <a^dagger^p a^q> by index shifting; p + q <= kMaxMomentOrder.
Complex moment(const FockVector& state, int p, int q);
Complex moment(const DensityMatrix& state, int p, int q);

DensityMatrix density_from_pure(const FockVector& state);

/// Convex combination sum_i w_i |v_i><v_i|. Weights must be non-negative and
/// sum to 1 within 1e-12; all states share one cutoff.
DensityMatrix mix(std::span<const double> weights, std::span<const FockVector> states);

/// <a|b>, conjugate-linear in a.
Complex overlap(const FockVector& a, const FockVector& b);

/// Closed-form <alpha|beta> for untruncated coherent states.
Complex coherent_overlap(Complex alpha, Complex beta);

}  // namespace catlab::fock
