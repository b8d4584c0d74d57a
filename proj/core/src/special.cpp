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

#include "catlab/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "catlab/errors.hpp"

namespace catlab::special {

double log_factorial(int n) {
  if (n < 0) throw RangeError("log_factorial: negative argument " + std::to_string(n));
  return std::lgamma(static_cast<double>(n) + 1.0);
}

std::vector<double> laguerre_assoc_sequence(int k_max, int m, double x) {
  if (k_max < 0) return {};
  if (m < 0) throw RangeError("laguerre_assoc_sequence: upper index must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(k_max) + 1);
  const double a = m;
  out[0] = 1.0;
  if (k_max >= 1) out[1] = 1.0 + a - x;
  for (int j = 1; j < k_max; ++j) {
    out[j + 1] = ((2.0 * j + 1.0 + a - x) * out[j] - (j + a) * out[j - 1]) / (j + 1.0);
  }
  return out;
}

double laguerre_assoc(int k, int m, double x) {
  if (k < 0) throw RangeError("laguerre_assoc: degree must be >= 0");
  if (m < -k) {
    throw RangeError("laguerre_assoc: upper index " + std::to_string(m) + " below -" +
                     std::to_string(k));
  }
  if (m >= 0) return laguerre_assoc_sequence(k, m, x).back();

  const int j = -m;
  // (-x)^j (k-j)!/k!
  double scale = 1.0;
  for (int i = 0; i < j; ++i) scale *= -x / static_cast<double>(k - i);
  return scale * laguerre_assoc_sequence(k - j, j, x).back();
}

}  // namespace catlab::special
