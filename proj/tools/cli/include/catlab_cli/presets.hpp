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

#include <string>
#include <string_view>
#include <vector>

#include "catlab_cli/config.hpp"

namespace catlab::cli {

enum class Command { witness, photon_dist, phase_space, validate };

std::string_view to_string(Command command);

struct FigurePreset {
  std::string name;
  Command command;
  std::string caption;
  KeyValues values;
};

const std::vector<FigurePreset>& presets();

/// Throws ConfigError for an unknown name.
const FigurePreset& find_preset(std::string_view name);

}  // namespace catlab::cli
