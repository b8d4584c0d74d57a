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

#include "catlab/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "catlab/errors.hpp"
#include "catlab/parallel.hpp"

namespace catlab::phase {

namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
// Extra levels on top of working_dimension for the dense displacement.
constexpr int kOraclePadding = 20;

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) out[i] = lo + step * i;
  out.back() = hi;
  return out;
}

void validate(const GridSpec& spec) {
  if (spec.re_count < 2 || spec.im_count < 2) {
    throw RangeError("grid: resolution must be at least 2 per axis");
  }
  const double bounds[] = {spec.re_min, spec.re_max, spec.im_min, spec.im_max};
  for (double b : bounds) {
    if (!std::isfinite(b)) throw RangeError("grid: bounds must be finite");
  }
  if (spec.re_min > spec.re_max || spec.im_min > spec.im_max) {
    throw RangeError("grid: axis minimum exceeds maximum");
  }
}

double husimi_value(const SpectralState& s, Complex alpha) {
  const Eigen::VectorXcd c = fock::coherent_amplitudes(alpha, s.cutoff);
  double q = 0.0;
  for (std::size_t i = 0; i < s.vectors.size(); ++i) {
    q += s.weights[i] * std::norm(c.dot(s.vectors[i]));
  }
  return q;
}

// Strict ordering used by wigner_min: lower value first, then the documented
// tie-breaks.
bool better(const WignerMinimum& a, const WignerMinimum& b) {
  if (a.value != b.value) return a.value < b.value;
  const double ra = std::abs(a.beta);
  const double rb = std::abs(b.beta);
  if (ra != rb) return ra < rb;
  if (a.beta.real() != b.beta.real()) return a.beta.real() < b.beta.real();
  return a.beta.imag() < b.beta.imag();
}

std::string describe(Complex beta) {
  std::ostringstream out;
  out.precision(12);
  out << "beta=(" << beta.real() << "," << beta.imag() << ")";
  return out.str();
}

}  // namespace

std::string_view to_string(HusimiConvention convention) {
  return convention == HusimiConvention::unscaled ? "unscaled" : "normalized";
}

std::string_view to_string(Distribution kind) {
  return kind == Distribution::wigner ? "wigner" : "husimi";
}

SpectralState spectral_form(const FockVector& state) {
  SpectralState s;
  s.cutoff = state.cutoff();
  s.weights = {1.0};
  s.vectors = {state.amplitudes()};
  s.trace = state.norm_squared();
  return s;
}

SpectralState spectral_form(const DensityMatrix& state) {
  SpectralState s;
  s.cutoff = state.cutoff();
  const Eigen::MatrixXcd herm = 0.5 * (state.entries() + state.entries().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  for (int i = 0; i < s.cutoff; ++i) {
    const double w = solver.eigenvalues()[i];
    if (std::abs(w) <= 1e-15) continue;
    s.weights.push_back(w);
    s.vectors.push_back(solver.eigenvectors().col(i));
    s.trace += w;
  }
  return s;
}

int working_dimension(int cutoff, double max_abs_beta) {
  const double reach = std::sqrt(static_cast<double>(cutoff)) + std::abs(max_abs_beta);
  return std::max(cutoff, fock::choose_cutoff(reach * reach, 1e-16));
}

WignerSeries::WignerSeries(SpectralState spectral, special::LaguerreSequenceFn laguerre)
    : spectral_(std::move(spectral)), laguerre_(std::move(laguerre)) {}

WignerValue WignerSeries::operator()(Complex beta, int k_max) const {
  const int dim = working_dimension(spectral_.cutoff, std::abs(beta));
  int count = dim;
  if (k_max >= 0) {
    if (k_max >= dim) {
      throw RangeError("wigner_series: k_max = " + std::to_string(k_max) +
                       " must be below the working dimension " + std::to_string(dim));
    }
    count = k_max + 1;
  }
  const int n = spectral_.cutoff;
  const Eigen::MatrixXcd overlaps = fock::displaced_overlaps(beta, n, count, laguerre_);

  Eigen::MatrixXcd vecs(n, static_cast<Eigen::Index>(spectral_.vectors.size()));
  for (std::size_t i = 0; i < spectral_.vectors.size(); ++i) vecs.col(i) = spectral_.vectors[i];
  // (k, i) entry: <beta,k|u_i>
  const Eigen::MatrixXcd proj = overlaps.adjoint() * vecs;

  WignerValue out;
  double sum = 0.0;
  double mass = 0.0;
  double last = 0.0;
  int k = 0;
  for (; k < count; ++k) {
    double term = 0.0;
    for (std::size_t i = 0; i < spectral_.weights.size(); ++i) {
      term += spectral_.weights[i] * std::norm(proj(k, static_cast<Eigen::Index>(i)));
    }
    sum += (k % 2 == 0) ? term : -term;
    mass += term;
    last = std::abs(term);
    if (last < kSeriesStopTolerance && std::abs(spectral_.trace - mass) < kSeriesStopTolerance) {
      ++k;
      break;
    }
  }
  out.value = kTwoOverPi * sum;
  out.terms = k;
  out.error_estimate = kTwoOverPi * std::max(last, std::abs(spectral_.trace - mass));
  out.converged = out.error_estimate <= kSeriesWarnTolerance;
  return out;
}

WignerParityOracle::WignerParityOracle(SpectralState spectral, double max_abs_beta)
    : spectral_(std::move(spectral)),
      max_abs_beta_(std::abs(max_abs_beta)),
      displacement_(working_dimension(spectral_.cutoff, max_abs_beta_) + kOraclePadding) {}

double WignerParityOracle::operator()(Complex beta) const {
  if (std::abs(beta) > max_abs_beta_ * (1.0 + 1e-12) + 1e-12) {
    throw RangeError("wigner_parity_oracle: |beta| exceeds the range the oracle was sized for");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < spectral_.vectors.size(); ++i) {
    const Eigen::VectorXcd shifted = displacement_.apply_adjoint(beta, spectral_.vectors[i]);
    double parity = 0.0;
    for (Eigen::Index m = 0; m < shifted.size(); ++m) {
      parity += (m % 2 == 0 ? 1.0 : -1.0) * std::norm(shifted[m]);
    }
    total += spectral_.weights[i] * parity;
  }
  return kTwoOverPi * total;
}

template <FieldState S>
double husimi(const S& state, Complex alpha, HusimiConvention convention) {
  const double q = husimi_value(spectral_form(state), alpha);
  return convention == HusimiConvention::unscaled ? q : q / std::numbers::pi;
}

// Pure states skip the eigendecomposition; mixed ones go through it so the
// cost per point is O(rank * N) instead of O(N^2).
template <>
double husimi<FockVector>(const FockVector& state, Complex alpha, HusimiConvention convention) {
  const Eigen::VectorXcd c = fock::coherent_amplitudes(alpha, state.cutoff());
  const double q = std::norm(c.dot(state.amplitudes()));
  return convention == HusimiConvention::unscaled ? q : q / std::numbers::pi;
}

std::vector<double> GridSpec::re_axis() const { return linspace(re_min, re_max, re_count); }
std::vector<double> GridSpec::im_axis() const { return linspace(im_min, im_max, im_count); }

double GridSpec::max_abs() const {
  const double re = std::max(std::abs(re_min), std::abs(re_max));
  const double im = std::max(std::abs(im_min), std::abs(im_max));
  return std::hypot(re, im);
}

double PhaseSpaceGrid::riemann_sum() const {
  if (re_axis.size() < 2 || im_axis.size() < 2) return 0.0;
  const double dre = (re_axis.back() - re_axis.front()) / static_cast<double>(re_axis.size() - 1);
  const double dim = (im_axis.back() - im_axis.front()) / static_cast<double>(im_axis.size() - 1);
  return values.sum() * dre * dim;
}

double PhaseSpaceGrid::min_value() const { return values.minCoeff(); }

template <FieldState S>
PhaseSpaceGrid grid_eval(const S& state, const GridSpec& spec, Distribution kind,
                         HusimiConvention convention, int threads) {
  validate(spec);
  PhaseSpaceGrid grid;
  grid.re_axis = spec.re_axis();
  grid.im_axis = spec.im_axis();
  grid.kind = kind;
  grid.convention = convention;
  grid.values = Eigen::MatrixXd::Zero(spec.im_count, spec.re_count);

  const std::size_t count = static_cast<std::size_t>(spec.re_count) * spec.im_count;
  std::vector<std::optional<std::string>> notes(count);
  auto beta_at = [&](std::size_t idx) {
    return Complex(grid.re_axis[idx % spec.re_count], grid.im_axis[idx / spec.re_count]);
  };

  SpectralState spectral = spectral_form(state);
  if (kind == Distribution::husimi) {
    const double scale = convention == HusimiConvention::unscaled ? 1.0 : 1.0 / std::numbers::pi;
    parallel_for(count, threads, [&](std::size_t idx) {
      grid.values(idx / spec.re_count, idx % spec.re_count) =
          scale * husimi_value(spectral, beta_at(idx));
    });
    return grid;
  }

  const WignerSeries series(spectral, special::laguerre_assoc_sequence);
  const WignerParityOracle oracle(spectral, spec.max_abs());
  parallel_for(count, threads, [&](std::size_t idx) {
    const Complex beta = beta_at(idx);
    const WignerValue w = series(beta);
    grid.values(idx / spec.re_count, idx % spec.re_count) = w.value;
    std::string note;
    if (!w.converged) {
      std::ostringstream msg;
      msg.precision(3);
      msg << "series not converged (error estimate " << w.error_estimate << ")";
      note = msg.str();
    }
    if (idx % 100 == 0) {
      const double diff = std::abs(w.value - oracle(beta));
      if (diff > kSpotCheckTolerance) {
        std::ostringstream msg;
        msg.precision(3);
        msg << (note.empty() ? "" : "; ") << "parity oracle mismatch " << diff;
        note += msg.str();
      }
    }
    if (!note.empty()) notes[idx] = describe(beta) + ": " + note;
  });
  grid.oracle_checks = static_cast<int>((count + 99) / 100);
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (notes[idx]) grid.warnings.push_back(GridWarning{beta_at(idx), *notes[idx]});
  }
  return grid;
}

template <FieldState S>
WignerMinimum wigner_min(const S& state, const GridSpec& region, int threads) {
  validate(region);
  const SpectralState spectral = spectral_form(state);
  const WignerSeries series(spectral, special::laguerre_assoc_sequence);
  const auto re = region.re_axis();
  const auto im = region.im_axis();

  const std::size_t count = re.size() * im.size();
  std::vector<WignerMinimum> coarse(count);
  parallel_for(count, threads, [&](std::size_t idx) {
    const Complex beta(re[idx % re.size()], im[idx / re.size()]);
    coarse[idx] = WignerMinimum{beta, series(beta).value};
  });
  WignerMinimum best = coarse.front();
  for (const auto& c : coarse) {
    if (better(c, best)) best = c;
  }

  double h_re = (region.re_max - region.re_min) / (region.re_count - 1);
  double h_im = (region.im_max - region.im_min) / (region.im_count - 1);
  for (int round = 0; round < 3; ++round) {
    h_re *= 0.5;
    h_im *= 0.5;
    const Complex centre = best.beta;
    for (int i = -1; i <= 1; ++i) {
      for (int j = -1; j <= 1; ++j) {
        if (i == 0 && j == 0) continue;
        const double x = std::clamp(centre.real() + i * h_re, region.re_min, region.re_max);
        const double y = std::clamp(centre.imag() + j * h_im, region.im_min, region.im_max);
        const WignerMinimum cand{Complex(x, y), series(Complex(x, y)).value};
        if (better(cand, best)) best = cand;
      }
    }
  }
  return best;
}

#define CATLAB_INSTANTIATE(S)                                                                \
  template PhaseSpaceGrid grid_eval<S>(const S&, const GridSpec&, Distribution,              \
                                       HusimiConvention, int);                               \
  template WignerMinimum wigner_min<S>(const S&, const GridSpec&, int);

CATLAB_INSTANTIATE(FockVector)
CATLAB_INSTANTIATE(DensityMatrix)
#undef CATLAB_INSTANTIATE

template double husimi<DensityMatrix>(const DensityMatrix&, Complex, HusimiConvention);

}  // namespace catlab::phase
