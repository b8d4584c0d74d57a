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

#include "catlab/displacement.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "catlab/errors.hpp"

namespace catlab::fock {

Eigen::MatrixXcd displaced_overlaps(Complex beta, int rows, int cols,
                                    const special::LaguerreSequenceFn& laguerre) {
  if (rows < 1 || cols < 1) throw RangeError("displaced_overlaps: empty shape");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rows, cols);
  const double r = std::abs(beta);
  if (r == 0.0) {
    for (int i = 0; i < std::min(rows, cols); ++i) out(i, i) = 1.0;
    return out;
  }
  const double x = r * r;
  const double log_r = std::log(r);
  const double arg = std::arg(beta);

  std::vector<double> log_fact(static_cast<std::size_t>(std::max(rows, cols)));
  for (std::size_t i = 0; i < log_fact.size(); ++i) {
    log_fact[i] = special::log_factorial(static_cast<int>(i));
  }

  // n >= k: e^{-x/2} sqrt(k!/n!) beta^{n-k} L_k^{(n-k)}(x), swept along k at
  // fixed offset n - k.
  for (int offset = 0; offset < rows; ++offset) {
    const int k_last = std::min(cols - 1, rows - 1 - offset);
    if (k_last < 0) continue;
    const auto seq = laguerre(k_last, offset, x);
    const Complex phase = std::polar(1.0, offset * arg);
    for (int k = 0; k <= k_last; ++k) {
      const int n = k + offset;
      const double mag = std::exp(-0.5 * x + 0.5 * (log_fact[k] - log_fact[n]) + offset * log_r);
      out(n, k) = mag * seq[k] * phase;
    }
  }
  // n < k: e^{-x/2} sqrt(n!/k!) (-beta^*)^{k-n} L_n^{(k-n)}(x), swept along n.
  for (int offset = 1; offset < cols; ++offset) {
    const int n_last = std::min(rows - 1, cols - 1 - offset);
    if (n_last < 0) continue;
    const auto seq = laguerre(n_last, offset, x);
    const Complex phase = std::polar(1.0, offset * (std::numbers::pi - arg));
    for (int n = 0; n <= n_last; ++n) {
      const int k = n + offset;
      const double mag = std::exp(-0.5 * x + 0.5 * (log_fact[n] - log_fact[k]) + offset * log_r);
      out(n, k) = mag * seq[n] * phase;
    }
  }
  return out;
}

DenseDisplacement::DenseDisplacement(int dim) : dim_(dim) {
  if (dim < 1) throw RangeError("DenseDisplacement: dimension must be >= 1");
  // i(a^dag - a) = S T S^dag with S = diag(i^n) and T real symmetric
  // tridiagonal with off-diagonal sqrt(n+1).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd sub(std::max(dim - 1, 0));
  for (int n = 0; n + 1 < dim; ++n) sub[n] = std::sqrt(static_cast<double>(n + 1));
  if (dim == 1) {
    eigenvalues_ = Eigen::VectorXd::Zero(1);
    eigenvectors_ = Eigen::MatrixXd::Identity(1, 1);
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

// D(beta) = P Q exp(-i r Lambda) Q^T P^dag with beta = r e^{i theta} and
// P = diag(e^{i n (theta + pi/2)}); the adjoint flips the sign of r.
Eigen::VectorXcd DenseDisplacement::apply_impl(Complex beta, const Eigen::VectorXcd& v,
                                               double sign) const {
  if (v.size() > dim_) {
    throw DimensionError("DenseDisplacement: vector of size " + std::to_string(v.size()) +
                         " exceeds dimension " + std::to_string(dim_));
  }
  const double r = std::abs(beta);
  const double rot = std::arg(beta) + 0.5 * std::numbers::pi;

  Eigen::VectorXd yr = Eigen::VectorXd::Zero(dim_);
  Eigen::VectorXd yi = Eigen::VectorXd::Zero(dim_);
  for (Eigen::Index n = 0; n < v.size(); ++n) {
    const Complex y = v[n] * std::polar(1.0, -static_cast<double>(n) * rot);
    yr[n] = y.real();
    yi[n] = y.imag();
  }
  const Eigen::VectorXd zr = eigenvectors_.transpose() * yr;
  const Eigen::VectorXd zi = eigenvectors_.transpose() * yi;
  Eigen::VectorXd wr(dim_);
  Eigen::VectorXd wi(dim_);
  for (int j = 0; j < dim_; ++j) {
    const Complex z = Complex(zr[j], zi[j]) * std::polar(1.0, -sign * r * eigenvalues_[j]);
    wr[j] = z.real();
    wi[j] = z.imag();
  }
  const Eigen::VectorXd ur = eigenvectors_ * wr;
  const Eigen::VectorXd ui = eigenvectors_ * wi;
  Eigen::VectorXcd out(dim_);
  for (int n = 0; n < dim_; ++n) {
    out[n] = Complex(ur[n], ui[n]) * std::polar(1.0, static_cast<double>(n) * rot);
  }
  return out;
}

Eigen::VectorXcd DenseDisplacement::apply(Complex beta, const Eigen::VectorXcd& v) const {
  return apply_impl(beta, v, 1.0);
}

Eigen::VectorXcd DenseDisplacement::apply_adjoint(Complex beta, const Eigen::VectorXcd& v) const {
  return apply_impl(beta, v, -1.0);
}

Eigen::MatrixXcd DenseDisplacement::matrix(Complex beta) const {
  const double r = std::abs(beta);
  const double rot = std::arg(beta) + 0.5 * std::numbers::pi;
  const Eigen::MatrixXcd q = eigenvectors_.cast<Complex>();
  Eigen::VectorXcd phases(dim_);
  for (int j = 0; j < dim_; ++j) phases[j] = std::polar(1.0, -r * eigenvalues_[j]);
  Eigen::MatrixXcd out = q * phases.asDiagonal() * q.transpose();
  for (int n = 0; n < dim_; ++n) {
    for (int m = 0; m < dim_; ++m) out(n, m) *= std::polar(1.0, (n - m) * rot);
  }
  return out;
}

FockVector displaced_number_state_dense(Complex beta, int k, int cutoff) {
  if (k < 0 || k >= cutoff) {
    throw RangeError("displaced_number_state_dense: k = " + std::to_string(k) +
                     " outside [0, " + std::to_string(cutoff) + ")");
  }
  const double reach = std::abs(beta) + std::sqrt(static_cast<double>(k) + 1.0);
  const int dim = cutoff + choose_cutoff(reach * reach, 1e-16);
  DenseDisplacement displacement(dim);
  Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
  basis[k] = 1.0;
  const Eigen::VectorXcd full = displacement.apply(beta, basis);
  const double mean = std::norm(beta) + k;
  if (poisson_tail(mean, cutoff) > kConstructorTailLimit) {
    throw CutoffError("displaced_number_state_dense: cutoff " + std::to_string(cutoff) +
                      " too small for mean photon number " + std::to_string(mean));
  }
  return FockVector::normalized(full.head(cutoff));
}

}  // namespace catlab::fock
