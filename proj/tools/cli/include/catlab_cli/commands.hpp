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

#include "catlab_cli/config.hpp"
#include "catlab_cli/format.hpp"

namespace catlab::cli {

/// Witness table: one row per sweep point and state kind.
Output cmd_witness(const RunConfig& cfg, int threads);

/// P(l) at fixed l along a sweep, or P(l) for l = 0..l_max without one.
/// Throws RangeError before any evaluation when l (or l_max) is not below
/// the cutoff of some point.
Output cmd_photon_dist(const RunConfig& cfg, int threads);

/// Grid of W or Q_f without a sweep; a single phase-space point along the
/// sweep otherwise.
Output cmd_phase_space(const RunConfig& cfg, int threads);

}  // namespace catlab::cli
