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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catlab/errors.hpp"
#include "catlab/model.hpp"
#include "catlab/phase_space.hpp"

namespace catlab::cli {

using Complex = std::complex<double>;

/// Bad configuration; the CLI maps this to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Format { csv, json };

/// Flat key -> value map, ordered by key.
using KeyValues = std::map<std::string, std::string>;

/// Every key accepted in config files and as --key flags.
const std::vector<std::string>& known_keys();

/// Parses the config-file grammar:
///   file  := { line }
///   line  := [ key ( '=' | ws ) value ] [ '#' comment ]
/// Keys must be known; repeated keys are an error. `origin` names the
/// source in error messages.
KeyValues parse_config_text(std::string_view text, std::string_view origin);
KeyValues read_config_file(const std::string& path);

struct SweepAxis {
  std::string param;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  std::vector<double> values() const;
};

enum class StateSelection { mixed, cat, both };

std::string_view to_string(StateSelection s);

/// Fully validated run configuration.
struct RunConfig {
  KeyValues raw;
  std::string preset;
  bool physical = false;
  StateSelection states = StateSelection::cat;
  double mu = 0.0;
  double tail_tol = 1e-12;
  std::optional<SweepAxis> sweep;

  int l = 2;
  int l_max = 10;

  phase::Distribution kind = phase::Distribution::wigner;
  phase::HusimiConvention convention = phase::HusimiConvention::normalized;
  phase::GridSpec grid;
  Complex point{};

  std::string level = "quick";

  /// Model parameters with `overrides` applied on top of raw; keys are
  /// lambda, chit, g, Delta, E_drive, t, theta, phi and the imaginary parts.
  model::ModelParams params(const KeyValues& overrides = {}) const;
  /// Value of a numeric key (after overrides), or the fallback.
  double number(const std::string& key, double fallback, const KeyValues& overrides = {}) const;
};

/// Layers preset < file < flags. A user layer that supplies one parameter
/// group replaces the preset's other group; supplying both groups across the
/// user layers is an error.
RunConfig resolve(const std::string& preset_name, const KeyValues& preset,
                  const KeyValues& file, const KeyValues& flags);

/// Number parsing that names the key on failure.
double parse_number(const std::string& key, const std::string& text);
int parse_int(const std::string& key, const std::string& text);

}  // namespace catlab::cli
