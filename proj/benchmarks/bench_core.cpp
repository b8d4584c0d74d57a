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

#include <cmath>
#include <numbers>

#include <benchmark/benchmark.h>

#include "catlab/fock.hpp"
#include "catlab/model.hpp"
#include "catlab/phase_space.hpp"

namespace {

using catlab::fock::Complex;

catlab::model::ModelParams cat_params(double lambda) {
  return catlab::model::ModelParams::dimensionless(lambda, 1.0, std::numbers::pi / 4, 0.0);
}

void BM_CoherentState(benchmark::State& state) {
  const double amplitude = static_cast<double>(state.range(0));
  const int cutoff = catlab::fock::choose_cutoff(amplitude * amplitude);
  for (auto _ : state) {
    benchmark::DoNotOptimize(catlab::fock::coherent_state({amplitude, 0.5}, cutoff));
  }
  state.SetLabel("cutoff " + std::to_string(cutoff));
}
BENCHMARK(BM_CoherentState)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_MomentPure(benchmark::State& state) {
  const auto p = cat_params(2.0);
  const auto cat = catlab::model::field_cat(p, 0.0, catlab::model::model_cutoff(p)).state;
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catlab::fock::moment(cat, order, order));
}
BENCHMARK(BM_MomentPure)->Arg(1)->Arg(2)->Arg(4);

void BM_MomentMixed(benchmark::State& state) {
  const auto p = cat_params(2.0);
  const auto rho = catlab::model::field_mixed(catlab::model::joint_state(p, catlab::model::model_cutoff(p)));
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catlab::fock::moment(rho, order, order));
}
BENCHMARK(BM_MomentMixed)->Arg(1)->Arg(2)->Arg(4);

void BM_WignerSeriesPoint(benchmark::State& state) {
  const auto p = cat_params(static_cast<double>(state.range(0)));
  const auto cat = catlab::model::field_cat(p, 0.0, catlab::model::model_cutoff(p)).state;
  const catlab::phase::WignerSeries series(cat);
  for (auto _ : state) benchmark::DoNotOptimize(series({0.7, -0.4}));
}
BENCHMARK(BM_WignerSeriesPoint)->Arg(1)->Arg(2)->Arg(4);

void BM_WignerParityPoint(benchmark::State& state) {
  const auto p = cat_params(static_cast<double>(state.range(0)));
  const auto cat = catlab::model::field_cat(p, 0.0, catlab::model::model_cutoff(p)).state;
  const catlab::phase::WignerParityOracle parity(cat, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(parity({0.7, -0.4}));
}
BENCHMARK(BM_WignerParityPoint)->Arg(1)->Arg(2)->Arg(4);

void BM_RotatingFramePropagation(benchmark::State& state) {
  const double ratio = 1.0 / static_cast<double>(state.range(0));
  const double g = 1.0, delta = g / ratio;
  const auto p = catlab::model::ModelParams::physical(g, delta, Complex(g, 0), delta, std::numbers::pi / 4, 0.0);
  const int cutoff = catlab::model::model_cutoff(p);
  const long steps = catlab::model::minimum_rotating_frame_steps(p);
  for (auto _ : state) benchmark::DoNotOptimize(catlab::model::propagate_rotating_frame(p, cutoff, steps));
  state.SetLabel("steps " + std::to_string(steps));
}
BENCHMARK(BM_RotatingFramePropagation)->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
