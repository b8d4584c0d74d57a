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

#include "catlab/witnesses.hpp"

#include <string>

#include "catlab/errors.hpp"

namespace catlab::witness {

namespace {

double population(const FockVector& s, int l) { return std::norm(s[l]); }
double population(const DensityMatrix& s, int l) { return s.entries()(l, l).real(); }

struct Moments {
  double n;        // <a^dag a>
  double n2;       // <a^dag2 a^2>
  Complex a;       // <a>
  Complex a2;      // <a^2>
};

template <FieldState S>
Moments moments(const S& state) {
  return Moments{
      fock::moment(state, 1, 1).real(),
      fock::moment(state, 2, 2).real(),
      fock::moment(state, 0, 1),
      fock::moment(state, 0, 2),
  };
}

Squeezing squeezing_from(const Moments& m) {
  // <a^dag> = conj(<a>), <a^dag2> = conj(<a^2>)
  const double quad = 2.0 * m.a2.real();
  const double mean_sq = 2.0 * (m.a * m.a).real();
  const double cross = 2.0 * std::norm(m.a);
  return Squeezing{2.0 * m.n + quad - mean_sq - cross, 2.0 * m.n - quad + mean_sq - cross};
}

std::optional<double> mandel_from(const Moments& m) {
  if (m.n < kUndefinedMeanPhoton) return std::nullopt;
  return m.n2 / m.n - m.n;
}

std::optional<double> g2_from(const Moments& m) {
  if (m.n < kUndefinedMeanPhoton) return std::nullopt;
  return m.n2 / (m.n * m.n);
}

}  // namespace

template <FieldState S>
std::vector<double> photon_distribution(const S& state, int l_max) {
  if (l_max < 0 || l_max >= state.cutoff()) {
    throw RangeError("photon_distribution: l_max = " + std::to_string(l_max) +
                     " must lie in [0, " + std::to_string(state.cutoff()) + ")");
  }
  std::vector<double> out(static_cast<std::size_t>(l_max) + 1);
  for (int l = 0; l <= l_max; ++l) out[l] = population(state, l);
  return out;
}

template <FieldState S>
std::optional<double> mandel_q(const S& state) {
  return mandel_from(moments(state));
}

template <FieldState S>
Squeezing squeezing(const S& state) {
  return squeezing_from(moments(state));
}

template <FieldState S>
std::optional<double> g2_zero(const S& state) {
  return g2_from(moments(state));
}

template <FieldState S>
double antibunch_d1(const S& state) {
  const auto m = moments(state);
  return m.n2 - m.n * m.n;
}

template <FieldState S>
WitnessReport witness_report(const S& state, int l_max) {
  const auto m = moments(state);
  const auto sq = squeezing_from(m);
  WitnessReport r;
  r.mean_n = m.n;
  r.mandel_q = mandel_from(m);
  r.s_x = sq.s_x;
  r.s_p = sq.s_p;
  r.g2 = g2_from(m);
  r.d1 = m.n2 - m.n * m.n;
  r.pn = photon_distribution(state, l_max);
  return r;
}

#define CATLAB_INSTANTIATE(S)                                                   \
  template std::vector<double> photon_distribution<S>(const S&, int);           \
  template std::optional<double> mandel_q<S>(const S&);                         \
  template Squeezing squeezing<S>(const S&);                                    \
  template std::optional<double> g2_zero<S>(const S&);                          \
  template double antibunch_d1<S>(const S&);                                    \
  template WitnessReport witness_report<S>(const S&, int);

CATLAB_INSTANTIATE(FockVector)
CATLAB_INSTANTIATE(DensityMatrix)
#undef CATLAB_INSTANTIATE

}  // namespace catlab::witness
