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

#include <Eigen/Dense>

#include "catlab/fock.hpp"
#include "catlab/special.hpp"

namespace catlab::fock {

/// Matrix of displaced-number-state amplitudes, entry (n, k) = <n|D(beta)|k>
/// for n < rows and k < cols, from the associated-Laguerre closed form
///   <n|beta,k> = e^{-|beta|^2/2} sqrt(k!/n!) beta^{n-k} L_k^{(n-k)}(|beta|^2).
/// Columns are exact projections; nothing is renormalized.
Eigen::MatrixXcd displaced_overlaps(
    Complex beta, int rows, int cols,
    const special::LaguerreSequenceFn& laguerre = special::laguerre_assoc_sequence);

/// Displacement operator D(beta) = exp(beta a^dagger - beta^* a) on a
/// truncated space, from one eigendecomposition of the real tridiagonal
/// matrix similar to i(a^dagger - a). Reusable across any number of betas.
///
/// Entries close to the truncation edge are inaccurate; callers pick dim
/// well above the support of the vectors they displace.
class DenseDisplacement {
 public:
  explicit DenseDisplacement(int dim);

  int dim() const { return dim_; }

  Eigen::MatrixXcd matrix(Complex beta) const;
  /// D(beta) v, v zero-padded to dim.
  Eigen::VectorXcd apply(Complex beta, const Eigen::VectorXcd& v) const;
  /// D(beta)^dagger v = D(-beta) v.
  Eigen::VectorXcd apply_adjoint(Complex beta, const Eigen::VectorXcd& v) const;

 private:
  Eigen::VectorXcd apply_impl(Complex beta, const Eigen::VectorXcd& v, double sign) const;

  int dim_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

/// D(beta)|k> through DenseDisplacement on an enlarged space, truncated to
/// the cutoff and renormalized. Independent of any Laguerre evaluation.
FockVector displaced_number_state_dense(Complex beta, int k, int cutoff);

}  // namespace catlab::fock
