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

#include "catlab/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "catlab/errors.hpp"
#include "catlab/displacement.hpp"
#include "catlab/special.hpp"

namespace catlab::fock {

namespace {

void check_order(int p, int q) {
  if (p < 0 || q < 0) throw RangeError("moment: orders must be non-negative");
  if (p + q > kMaxMomentOrder) {
    throw UnsupportedOrderError("moment: order p + q = " + std::to_string(p + q) +
                                " exceeds supported maximum " +
                                std::to_string(kMaxMomentOrder));
  }
}

// (j+1)(j+2)...(j+p) = (j+p)!/j!
double rising(int j, int p) {
  double r = 1.0;
  for (int i = 1; i <= p; ++i) r *= static_cast<double>(j + i);
  return r;
}

void check_tail(double mean, int cutoff, const char* what) {
  const double tail = poisson_tail(mean, cutoff);
  if (tail > kConstructorTailLimit) {
    std::ostringstream msg;
    msg << what << ": cutoff " << cutoff << " too small for mean photon number " << mean
        << " (Poisson tail " << tail << " > " << kConstructorTailLimit << ")";
    throw CutoffError(msg.str());
  }
}

}  // namespace

double poisson_tail(double mean, int from) {
  if (from <= 0) return 1.0;
  if (!(mean > 0.0)) return 0.0;
  const double log_mean = std::log(mean);
  auto term = [&](int n) { return std::exp(-mean + n * log_mean - special::log_factorial(n)); };
  double sum = 0.0;
  if (from <= mean) {
    // Below the mode: sum the (smaller) head downwards and complement.
    for (int n = from - 1; n >= 0; --n) {
      const double t = term(n);
      sum += t;
      if (t == 0.0 || t < 1e-20 * sum) break;
    }
    return std::max(0.0, 1.0 - sum);
  }
  for (int n = from;; ++n) {
    const double t = term(n);
    sum += t;
    if (t == 0.0 || t < 1e-20 * sum) break;
  }
  return std::min(sum, 1.0);
}

int choose_cutoff(double mean_photon, double tail_tol) {
  const double mean = (std::isfinite(mean_photon) && mean_photon > 0.0) ? mean_photon : 0.0;
  const double tol = std::isnan(tail_tol) ? 1e-12 : std::clamp(tail_tol, 1e-300, 0.5);

  // Tail is decreasing in the start index: bisect for the first index below tol.
  int lo = 1;
  int hi = kMaxCutoff - kCutoffPadding;
  if (poisson_tail(mean, hi) >= tol) return kMaxCutoff;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (poisson_tail(mean, mid) < tol) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return std::max(kMinCutoff, lo + kCutoffPadding);
}

FockVector::FockVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) throw RangeError("FockVector: cutoff must be >= 1");
}

FockVector FockVector::normalized(Eigen::VectorXcd amplitudes) {
  const double norm2 = amplitudes.squaredNorm();
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw InvalidArgumentError("FockVector::normalized: vector has zero or non-finite norm");
  }
  amplitudes /= std::sqrt(norm2);
  FockVector out(std::move(amplitudes));
  out.truncation_deficit_ = 1.0 - norm2;
  return out;
}

double FockVector::tail_mass() const { return std::norm(amplitudes_[amplitudes_.size() - 1]); }

FockVector FockVector::with_global_phase(double phase) const {
  FockVector out(amplitudes_ * std::polar(1.0, phase));
  out.truncation_deficit_ = truncation_deficit_;
  return out;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw DimensionError("DensityMatrix: entries must be a non-empty square matrix");
  }
  const double herm = hermiticity_error();
  if (herm > 1e-12) {
    throw InvalidArgumentError("DensityMatrix: not Hermitian (max |rho - rho^dag| = " +
                               std::to_string(herm) + ")");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > 1e-10) {
    throw InvalidArgumentError("DensityMatrix: trace differs from 1");
  }
  if (eigenvalues()(0) < -1e-10) {
    throw InvalidArgumentError("DensityMatrix: not positive semidefinite");
  }
}

double DensityMatrix::hermiticity_error() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  const Eigen::MatrixXcd herm = 0.5 * (entries_ + entries_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return entries_.cwiseAbs2().sum();
}

Eigen::VectorXcd coherent_amplitudes(Complex alpha, int cutoff) {
  if (cutoff < 1) throw RangeError("coherent_amplitudes: cutoff must be >= 1");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(cutoff);
  const double r = std::abs(alpha);
  if (r == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double arg = std::arg(alpha);
  const double r2 = r * r;

  std::vector<double> mag(static_cast<std::size_t>(cutoff));
  const int anchor = static_cast<int>(std::min<double>(std::floor(r2), cutoff - 1));
  mag[anchor] = std::exp(-0.5 * r2 + anchor * std::log(r) - 0.5 * special::log_factorial(anchor));
  for (int n = anchor + 1; n < cutoff; ++n) mag[n] = mag[n - 1] * r / std::sqrt(double(n));
  for (int n = anchor; n > 0; --n) mag[n - 1] = mag[n] * std::sqrt(double(n)) / r;

  for (int n = 0; n < cutoff; ++n) out[n] = std::polar(mag[n], n * arg);
  return out;
}

FockVector coherent_state(Complex alpha, int cutoff) {
  if (cutoff < 1) throw RangeError("coherent_state: cutoff must be >= 1");
  check_tail(std::norm(alpha), cutoff, "coherent_state");
  return FockVector::normalized(coherent_amplitudes(alpha, cutoff));
}

FockVector fock_state(int n, int cutoff) {
  if (cutoff < 1) throw RangeError("fock_state: cutoff must be >= 1");
  if (n < 0 || n >= cutoff) {
    throw RangeError("fock_state: n = " + std::to_string(n) + " outside [0, " +
                     std::to_string(cutoff) + ")");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff);
  v[n] = 1.0;
  return FockVector(std::move(v));
}

Complex moment(const FockVector& state, int p, int q) {
  check_order(p, q);
  const auto& c = state.amplitudes();
  const int n = state.cutoff();
  std::complex<long double> acc = 0.0L;
  for (int j = 0; j + std::max(p, q) < n; ++j) {
    const double w = std::sqrt(rising(j, p) * rising(j, q));
    const Complex term = std::conj(c[j + p]) * c[j + q] * w;
    acc += std::complex<long double>(term.real(), term.imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

Complex moment(const DensityMatrix& state, int p, int q) {
  check_order(p, q);
  const auto& rho = state.entries();
  const int n = state.cutoff();
  std::complex<long double> acc = 0.0L;
  for (int j = 0; j + std::max(p, q) < n; ++j) {
    const double w = std::sqrt(rising(j, p) * rising(j, q));
    const Complex term = rho(j + q, j + p) * w;
    acc += std::complex<long double>(term.real(), term.imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

DensityMatrix density_from_pure(const FockVector& state) {
  const auto& v = state.amplitudes();
  return DensityMatrix(DensityMatrix::Unchecked{}, v * v.adjoint());
}

DensityMatrix mix(std::span<const double> weights, std::span<const FockVector> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw DimensionError("mix: need one weight per state and at least one state");
  }
  const int n = states.front().cutoff();
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0)) throw InvalidArgumentError("mix: weights must be non-negative");
    if (states[i].cutoff() != n) throw DimensionError("mix: states have different cutoffs");
    total += weights[i];
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidArgumentError("mix: weights must sum to 1");

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& v = states[i].amplitudes();
    rho.noalias() += weights[i] * (v * v.adjoint());
  }
  return DensityMatrix(DensityMatrix::Unchecked{}, std::move(rho));
}

Complex overlap(const FockVector& a, const FockVector& b) {
  if (a.cutoff() != b.cutoff()) {
    throw DimensionError("overlap: cutoffs differ (" + std::to_string(a.cutoff()) + " vs " +
                         std::to_string(b.cutoff()) + ")");
  }
  return a.amplitudes().dot(b.amplitudes());
}

Complex coherent_overlap(Complex alpha, Complex beta) {
  return std::exp(-0.5 * std::norm(alpha) - 0.5 * std::norm(beta) + std::conj(alpha) * beta);
}

FockVector displaced_number_state(Complex beta, int k, int cutoff) {
  if (k < 0 || k >= cutoff) {
    throw RangeError("displaced_number_state: k = " + std::to_string(k) + " outside [0, " +
                     std::to_string(cutoff) + ")");
  }
  check_tail(std::norm(beta) + k, cutoff, "displaced_number_state");
  return FockVector::normalized(displaced_overlaps(beta, cutoff, k + 1).col(k));
}

}  // namespace catlab::fock
