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

#include <concepts>
#include <optional>
#include <vector>

#include "catlab/fock.hpp"
#include "catlab/model.hpp"

namespace catlab::witness {

using fock::Complex;
using fock::DensityMatrix;
using fock::FockVector;

template <class S>
concept FieldState = std::same_as<S, FockVector> || std::same_as<S, DensityMatrix>;

/// Below this mean photon number Q_M and g2(0) are reported as undefined.
inline constexpr double kUndefinedMeanPhoton = 1e-12;

/// P(l) for l = 0..l_max. Throws RangeError when l_max >= cutoff.
template <FieldState S>
std::vector<double> photon_distribution(const S& state, int l_max);

/// Q_M = <a^dag2 a^2>/<a^dag a> - <a^dag a>; empty for (near-)vacuum input.
template <FieldState S>
std::optional<double> mandel_q(const S& state);

struct Squeezing {
  double s_x;
  double s_p;
};

/// S_x = 2<a^dag a> + <a^2> + <a^dag2> - <a>^2 - <a^dag>^2 - 2<a><a^dag>,
/// S_p with the signs of the quadratic terms flipped. Negative means the
/// quadrature variance is below the vacuum level.
template <FieldState S>
Squeezing squeezing(const S& state);

template <FieldState S>
std::optional<double> g2_zero(const S& state);

/// d1 = <a^dag2 a^2> - <a^dag a>^2.
template <FieldState S>
double antibunch_d1(const S& state);

struct WitnessReport {
  double mean_n = 0.0;
  std::optional<double> mandel_q;
  double s_x = 0.0;
  double s_p = 0.0;
  std::optional<double> g2;
  double d1 = 0.0;
  std::vector<double> pn;
};

/// All scalar witnesses from one set of moments.
template <FieldState S>
WitnessReport witness_report(const S& state, int l_max);

/// Which reduction of the joint state a closed-form moment refers to.
enum class StateKind { mixed, cat };

/// Closed-form <a^dag^p a^q> for the model's field states, built from the
/// branch amplitudes and phases:
///   mixed: sum_b |w_b|^2 conj(alpha_b)^p alpha_b^q
///   cat:   sum_{i,j} conj(c_i) c_j conj(alpha_i)^p alpha_j^q <alpha_i|alpha_j> / P
/// with c_e = w_e e^{i phase_e}, c_f = e^{-i mu} w_f e^{i phase_f}.
/// Throws UnsupportedOrderError above fock::kMaxMomentOrder and
/// DegenerateOutcomeError when the cat outcome has probability < 1e-12.
Complex analytic_moment(const model::ModelParams& params, int p, int q, StateKind kind,
                        double atom_phase = 0.0);

/// Closed-form probability of the cat conditioning outcome.
double analytic_cat_probability(const model::ModelParams& params, double atom_phase);

}  // namespace catlab::witness
