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

#include <gtest/gtest.h>

#include "catlab/errors.hpp"
#include "catlab/special.hpp"
#include "oracles.hpp"

namespace {

using catlab::special::laguerre_assoc;
using catlab::special::laguerre_assoc_sequence;
namespace oracle = catlab_test::oracle;

TEST(Laguerre, MatchesSeriesForNonNegativeOrder) {
  for (double x : {0.0, 0.1, 1.0, 4.0, 10.0, 25.0}) {
    for (int m = 0; m <= 20; m += 3) {
      for (int k = 0; k <= 30; ++k) {
        const double want = oracle::laguerre_series(k, m, x);
        EXPECT_NEAR(laguerre_assoc(k, m, x), want, 1e-11 * std::max(1.0, std::abs(want)))
            << "k=" << k << " m=" << m << " x=" << x;
      }
    }
  }
}

TEST(Laguerre, MatchesSeriesForNegativeOrder) {
  for (double x : {0.0, 0.5, 3.0, 12.0}) {
    for (int k = 0; k <= 25; ++k) {
      for (int m = -k; m < 0; ++m) {
        const double want = oracle::laguerre_series(k, m, x);
        EXPECT_NEAR(laguerre_assoc(k, m, x), want, 1e-11 * std::max(1.0, std::abs(want)))
            << "k=" << k << " m=" << m << " x=" << x;
      }
    }
  }
}

TEST(Laguerre, LowOrders) {
  EXPECT_DOUBLE_EQ(laguerre_assoc(0, 5, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(laguerre_assoc(1, 2, 0.5), 2.5);
  // L_2^{(0)}(x) = 1 - 2x + x^2/2
  EXPECT_NEAR(laguerre_assoc(2, 0, 3.0), 1 - 6 + 4.5, 1e-15);
}

TEST(Laguerre, OrderBelowMinusDegreeIsRangeError) {
  EXPECT_THROW(laguerre_assoc(2, -3, 1.0), catlab::RangeError);
}

TEST(Laguerre, SequenceAgreesWithPointwise) {
  const auto seq = laguerre_assoc_sequence(40, 7, 6.5);
  ASSERT_EQ(seq.size(), 41u);
  for (int k = 0; k <= 40; ++k) {
    EXPECT_NEAR(seq[k], laguerre_assoc(k, 7, 6.5), 1e-12 * std::max(1.0, std::abs(seq[k])));
  }
}

TEST(LogFactorial, MatchesLgamma) {
  for (int n = 0; n < 200; ++n) {
    EXPECT_NEAR(catlab::special::log_factorial(n), std::lgamma(n + 1.0), 1e-12 * (1 + n));
  }
}

}  // namespace
