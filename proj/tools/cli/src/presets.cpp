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

#include "catlab_cli/presets.hpp"

#include <algorithm>

namespace catlab::cli {

namespace {

constexpr const char* kSweepCount = "201";
constexpr const char* kLambdaStop = "4";
constexpr const char* kChitStop = "12.5663706143592";  // 4 pi

KeyValues lambda_sweep(KeyValues kv) {
  kv["sweep_param"] = "lambda";
  kv["sweep_start"] = "0";
  kv["sweep_stop"] = kLambdaStop;
  kv["sweep_count"] = kSweepCount;
  kv["state_kind"] = "both";
  return kv;
}

KeyValues chit_sweep(KeyValues kv) {
  kv["sweep_param"] = "chit";
  kv["sweep_start"] = "0";
  kv["sweep_stop"] = kChitStop;
  kv["sweep_count"] = kSweepCount;
  kv["state_kind"] = "both";
  return kv;
}

KeyValues point_sweep(KeyValues kv) {
  kv["sweep_param"] = "point_re";
  kv["sweep_start"] = "-3";
  kv["sweep_stop"] = "3";
  kv["sweep_count"] = kSweepCount;
  kv["state_kind"] = "both";
  return kv;
}

std::vector<FigurePreset> build() {
  using C = Command;
  const KeyValues husimi = {{"kind", "husimi"}, {"convention", "unscaled"}};
  auto with = [](KeyValues a, const KeyValues& b) {
    for (const auto& [k, v] : b) a[k] = v;
    return a;
  };
  return {
      {"fig2a", C::photon_dist, "P(2) vs lambda, chi t = 2",
       lambda_sweep({{"chit", "2"}, {"l", "2"}})},
      {"fig2b", C::photon_dist, "P(2) vs chi t, lambda = 2",
       chit_sweep({{"lambda", "2"}, {"l", "2"}})},
      {"fig2c", C::photon_dist, "P(l) vs l, lambda = 1, chi t = 4",
       {{"lambda", "1"}, {"chit", "4"}, {"l_max", "10"}, {"state_kind", "both"}}},
      {"fig3a", C::witness, "Q_M vs lambda, chi t = 0.2", lambda_sweep({{"chit", "0.2"}})},
      {"fig3b", C::witness, "Q_M vs chi t, lambda = 0.35", chit_sweep({{"lambda", "0.35"}})},
      {"fig4a", C::witness, "S_x, S_p vs lambda, chi t = 1", lambda_sweep({{"chit", "1"}})},
      {"fig4b", C::witness, "S_x, S_p vs chi t, lambda = 1", chit_sweep({{"lambda", "1"}})},
      {"fig5a", C::witness, "S_x, S_p vs lambda, chi t = 1", lambda_sweep({{"chit", "1"}})},
      {"fig5b", C::witness, "S_x, S_p vs chi t, lambda = 1", chit_sweep({{"lambda", "1"}})},
      {"fig6a", C::phase_space, "W vs lambda, chi t = 2, beta = 1",
       lambda_sweep({{"chit", "2"}, {"point_re", "1"}})},
      {"fig6b", C::phase_space, "W vs real beta, chi t = 1, lambda = 1",
       point_sweep({{"lambda", "1"}, {"chit", "1"}})},
      {"fig6c", C::phase_space, "W vs chi t, beta = 1, lambda = 1",
       chit_sweep({{"lambda", "1"}, {"point_re", "1"}})},
      {"fig7a", C::phase_space, "Q_f vs lambda, chi t = 1, alpha = 1",
       lambda_sweep(with({{"chit", "1"}, {"point_re", "1"}}, husimi))},
      {"fig7b", C::phase_space, "Q_f vs real alpha, chi t = 1, lambda = 1",
       point_sweep(with({{"lambda", "1"}, {"chit", "1"}}, husimi))},
      {"fig7c", C::phase_space, "Q_f vs chi t, alpha = 1, lambda = 1",
       chit_sweep(with({{"lambda", "1"}, {"point_re", "1"}}, husimi))},
      {"fig8a", C::witness, "g2(0) vs lambda, chi t = 1", lambda_sweep({{"chit", "1"}})},
      {"fig8b", C::witness, "g2(0) vs chi t, lambda = 2", chit_sweep({{"lambda", "2"}})},
      {"fig9a", C::witness, "d1 vs lambda, chi t = 1", lambda_sweep({{"chit", "1"}})},
      {"fig9b", C::witness, "d1 vs chi t, lambda = 2", chit_sweep({{"lambda", "2"}})},
  };
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::witness: return "witness";
    case Command::photon_dist: return "photon-dist";
    case Command::phase_space: return "phase-space";
    case Command::validate: return "validate";
  }
  return "witness";
}

const std::vector<FigurePreset>& presets() {
  static const std::vector<FigurePreset> all = build();
  return all;
}

const FigurePreset& find_preset(std::string_view name) {
  const auto& all = presets();
  const auto it =
      std::find_if(all.begin(), all.end(), [&](const auto& p) { return p.name == name; });
  if (it == all.end()) throw ConfigError("preset: unknown name '" + std::string(name) + "'");
  return *it;
}

}  // namespace catlab::cli
