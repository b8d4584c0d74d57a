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
#include <vector>

#include "catlab/special.hpp"
#include "catlab_cli/format.hpp"

namespace catlab::cli {

struct CheckResult {
  std::string name;
  /// Worst error (or worst bound violation) over all cases.
  double measured = 0.0;
  double tolerance = 0.0;
  int cases = 0;
  bool passed = false;
  std::string detail;
};

struct ValidateOptions {
  std::string level = "quick";
  int threads = 1;
  /// Laguerre evaluator used by the series side of the Wigner check.
  special::LaguerreSequenceFn laguerre = special::laguerre_assoc_sequence;
};

struct ValidateReport {
  std::string level;
  std::vector<double> lambdas;
  std::vector<double> chits;
  std::vector<CheckResult> checks;
  int skipped_degenerate = 0;
  double seconds = 0.0;

  bool passed() const;
};

/// Runs every differential check over the level's (lambda, chi t) grid.
/// Cat states are taken at atom phases 0 and pi/2; degenerate outcomes are
/// skipped and counted.
ValidateReport run_validate(const ValidateOptions& options);

Output validate_output(const ValidateReport& report);

}  // namespace catlab::cli
