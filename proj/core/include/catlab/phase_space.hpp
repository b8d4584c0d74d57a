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
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "catlab/displacement.hpp"
#include "catlab/fock.hpp"
#include "catlab/special.hpp"
#include "catlab/witnesses.hpp"

namespace catlab::phase {

using fock::Complex;
using fock::DensityMatrix;
using fock::FockVector;
using witness::FieldState;

/// Series terms and remaining mass below this stop the Wigner sum.
inline constexpr double kSeriesStopTolerance = 1e-12;
/// Error estimates above this flag a Wigner value as not converged.
inline constexpr double kSeriesWarnTolerance = 1e-9;

struct WignerValue {
  double value = 0.0;
  /// max(|last retained term|, mass not yet summed); bounds the tail of
  /// the alternating series.
  double error_estimate = 0.0;
  int terms = 0;
  bool converged = true;
};

/// Spectral form of a state: sum_i weight_i |vector_i><vector_i|.
struct SpectralState {
  std::vector<double> weights;
  std::vector<Eigen::VectorXcd> vectors;
  int cutoff = 0;
  double trace = 0.0;
};

SpectralState spectral_form(const FockVector& state);
/// Eigenvectors with |eigenvalue| > 1e-15 are kept.
SpectralState spectral_form(const DensityMatrix& state);

/// Working dimension large enough to hold D(+-beta) applied to anything
/// supported below `cutoff`, for |beta| <= max_abs_beta.
int working_dimension(int cutoff, double max_abs_beta);

/// W(beta) = (2/pi) sum_k (-1)^k <beta,k|rho|beta,k> with the displaced
/// number states taken from the Laguerre closed form. The state is
/// preprocessed once so many points can be evaluated cheaply.
class WignerSeries {
 public:
  template <FieldState S>
  explicit WignerSeries(const S& state,
                        special::LaguerreSequenceFn laguerre = special::laguerre_assoc_sequence)
      : WignerSeries(spectral_form(state), std::move(laguerre)) {}

  WignerSeries(SpectralState spectral, special::LaguerreSequenceFn laguerre);

  /// k_max < 0 selects the working dimension for |beta|. Throws RangeError
  /// when an explicit k_max is not below that dimension.
  WignerValue operator()(Complex beta, int k_max = -1) const;

 private:
  SpectralState spectral_;
  special::LaguerreSequenceFn laguerre_;
};

template <FieldState S>
WignerValue wigner_series(const S& state, Complex beta, int k_max = -1) {
  return WignerSeries(state)(beta, k_max);
}

/// W(beta) = (2/pi) Tr[D(beta)^dag rho D(beta) Pi], Pi = diag((-1)^n), with
/// D from DenseDisplacement. No Laguerre polynomial is evaluated anywhere
/// on this path.
class WignerParityOracle {
 public:
  template <FieldState S>
  WignerParityOracle(const S& state, double max_abs_beta)
      : WignerParityOracle(spectral_form(state), max_abs_beta) {}

  WignerParityOracle(SpectralState spectral, double max_abs_beta);

  double operator()(Complex beta) const;
  double max_abs_beta() const { return max_abs_beta_; }

 private:
  SpectralState spectral_;
  double max_abs_beta_;
  fock::DenseDisplacement displacement_;
};

template <FieldState S>
double wigner_parity_oracle(const S& state, Complex beta) {
  return WignerParityOracle(state, std::abs(beta))(beta);
}

enum class HusimiConvention { unscaled, normalized };
enum class Distribution { wigner, husimi };

std::string_view to_string(HusimiConvention convention);
std::string_view to_string(Distribution kind);

/// Q_f = <alpha|rho|alpha>; the normalized convention divides by pi so
/// that the plane integral is 1.
template <FieldState S>
double husimi(const S& state, Complex alpha,
              HusimiConvention convention = HusimiConvention::normalized);

struct GridSpec {
  double re_min = -3.0;
  double re_max = 3.0;
  double im_min = -3.0;
  double im_max = 3.0;
  int re_count = 21;
  int im_count = 21;

  std::vector<double> re_axis() const;
  std::vector<double> im_axis() const;
  double max_abs() const;
};

struct GridWarning {
  Complex beta;
  std::string message;
};

struct PhaseSpaceGrid {
  std::vector<double> re_axis;
  std::vector<double> im_axis;
  /// Row = im index, column = re index.
  Eigen::MatrixXd values;
  Distribution kind = Distribution::wigner;
  HusimiConvention convention = HusimiConvention::normalized;
  std::vector<GridWarning> warnings;
  int oracle_checks = 0;

  /// sum(values) * d_re * d_im.
  double riemann_sum() const;
  double min_value() const;
};

/// Every 100th point (linear index, row-major) of a Wigner grid is checked
/// against the parity oracle; mismatches above this become warnings.
inline constexpr double kSpotCheckTolerance = 1e-8;

/// Evaluates W or Q_f on a rectangular grid. Output does not depend on the
/// thread count. Throws RangeError when an axis has fewer than 2 points.
template <FieldState S>
PhaseSpaceGrid grid_eval(const S& state, const GridSpec& spec, Distribution kind,
                         HusimiConvention convention = HusimiConvention::normalized,
                         int threads = 1);

struct WignerMinimum {
  Complex beta;
  double value = 0.0;
};

/// Coarse scan of the region followed by three rounds of local refinement
/// (spacing halved each round). Ties go to the smallest |beta|, then the
/// smallest real part, then the smallest imaginary part.
template <FieldState S>
WignerMinimum wigner_min(const S& state, const GridSpec& region, int threads = 1);

}  // namespace catlab::phase
