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

#include <functional>
#include <vector>

namespace catlab::special {

/// log(n!) for n >= 0.
double log_factorial(int n);

/// Generalized (associated) Laguerre polynomial L_k^{(m)}(x).
///
/// Integer upper index m >= -k. Non-negative m uses the three-term
/// recurrence in k; negative m is mapped onto a non-negative one with
///   L_k^{(-j)}(x) = (-x)^j (k-j)!/k! L_{k-j}^{(j)}(x).
double laguerre_assoc(int k, int m, double x);

/// L_0^{(m)}(x), ..., L_{k_max}^{(m)}(x) for m >= 0 from one recurrence pass.
std::vector<double> laguerre_assoc_sequence(int k_max, int m, double x);

/// Signature shared by laguerre_assoc_sequence and any substitute used for
/// fault-injection in the differential checks.
using LaguerreSequenceFn = std::function<std::vector<double>(int, int, double)>;

}  // namespace catlab::special
