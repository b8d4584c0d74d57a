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

// Randomized invariants with a fixed seed; each case prints its inputs on
// failure so it can be replayed directly.

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "catlab/displacement.hpp"
#include "catlab/model.hpp"
#include "catlab/phase_space.hpp"
#include "catlab/witnesses.hpp"

namespace {

using catlab::fock::Complex;
using catlab::fock::FockVector;
using catlab::model::ModelParams;
constexpr double kPi = std::numbers::pi;
constexpr int kCases = 60;

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex(double r) { return std::polar(uniform(0, r), uniform(-kPi, kPi)); }

  /// Normalized state with a decaying random tail.
  FockVector state(int cutoff) {
    Eigen::VectorXcd v(cutoff);
    const int support = integer(1, cutoff / 2);
    for (int n = 0; n < cutoff; ++n) {
      const double scale = n < support ? 1.0 : std::exp(-2.0 * (n - support));
      v[n] = scale * Complex(uniform(-1, 1), uniform(-1, 1));
    }
    return FockVector(v / v.norm());
  }

  ModelParams params() {
    return ModelParams::dimensionless(complex(3.0), uniform(0, 2 * kPi), uniform(0, kPi),
                                      uniform(-kPi, kPi));
  }

 private:
  std::mt19937 rng_;
};

TEST(Properties, MomentsAreHermitianConjugates) {
  Gen gen(11);
  for (int c = 0; c < kCases; ++c) {
    const auto s = gen.state(gen.integer(16, 40));
    const int p = gen.integer(0, 4), q = gen.integer(0, 4);
    const Complex a = catlab::fock::moment(s, p, q);
    const Complex b = catlab::fock::moment(s, q, p);
    EXPECT_NEAR(std::abs(a - std::conj(b)), 0, 1e-11) << "case " << c;
    EXPECT_GE(catlab::fock::moment(s, 1, 1).real(), 0.0);
    EXPECT_NEAR(catlab::fock::moment(s, 0, 0).real(), 1.0, 1e-12);
  }
}

TEST(Properties, UncertaintyProductBound) {
  Gen gen(12);
  for (int c = 0; c < kCases; ++c) {
    const auto s = gen.state(gen.integer(16, 30));
    const auto sq = catlab::witness::squeezing(s);
    EXPECT_GE((1 + sq.s_x) * (1 + sq.s_p), 1.0 - 1e-9) << "case " << c;
    EXPECT_GT(sq.s_x, -1.0);
    EXPECT_GT(sq.s_p, -1.0);
  }
}

TEST(Properties, PhotonDistributionIsProbability) {
  Gen gen(13);
  for (int c = 0; c < kCases; ++c) {
    const int n = gen.integer(16, 30);
    const auto pn = catlab::witness::photon_distribution(gen.state(n), n - 1);
    double total = 0;
    for (double p : pn) {
      EXPECT_GE(p, 0.0);
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(Properties, JointStateNormAndComplementaryOutcomes) {
  Gen gen(14);
  for (int c = 0; c < kCases; ++c) {
    const auto p = gen.params();
    const auto j = catlab::model::joint_state(p, catlab::model::model_cutoff(p));
    EXPECT_NEAR(j.norm_squared(), 1.0, 1e-11) << "lambda=" << p.lambda() << " chit=" << p.chit();
    const double mu = gen.uniform(0, 2 * kPi);
    EXPECT_NEAR(catlab::witness::analytic_cat_probability(p, mu) +
                    catlab::witness::analytic_cat_probability(p, mu + kPi),
                1.0, 1e-12);
  }
}

TEST(Properties, MixedStateIsPoissonian) {
  Gen gen(15);
  for (int c = 0; c < kCases; ++c) {
    const auto p = gen.params();
    const int n = catlab::model::model_cutoff(p);
    const auto rho = catlab::model::field_mixed(catlab::model::joint_state(p, n));
    const double mean = catlab::model::branch_mean_photon(p);
    const int l = gen.integer(0, n - 1);
    const double want = mean == 0 ? (l == 0 ? 1.0 : 0.0)
                                   : std::exp(-mean + l * std::log(mean) - std::lgamma(l + 1.0));
    EXPECT_NEAR(catlab::witness::photon_distribution(rho, l)[l], want, 1e-10);
    if (const auto q = catlab::witness::mandel_q(rho)) EXPECT_NEAR(*q, 0.0, 1e-9);
  }
}

TEST(Properties, AnalyticMomentsMatchNumeric) {
  Gen gen(16);
  for (int c = 0; c < kCases; ++c) {
    const auto p = gen.params();
    const int n = catlab::model::model_cutoff(p, 1e-16);
    const auto joint = catlab::model::joint_state(p, n);
    const int a = gen.integer(0, 4), b = gen.integer(0, 4);
    const double mu = gen.uniform(0, 2 * kPi);
    if (catlab::witness::analytic_cat_probability(p, mu) < 1e-6) continue;
    const auto cat = catlab::model::field_cat(joint, mu).state;
    const Complex want = catlab::witness::analytic_moment(p, a, b, catlab::witness::StateKind::cat, mu);
    EXPECT_NEAR(std::abs(want - catlab::fock::moment(cat, a, b)), 0, 1e-8 * std::max(1.0, std::abs(want)))
        << "lambda=" << p.lambda() << " chit=" << p.chit() << " mu=" << mu;
  }
}

TEST(Properties, WignerBoundedAndHusimiNonNegative) {
  Gen gen(17);
  for (int c = 0; c < 20; ++c) {
    const auto s = gen.state(gen.integer(16, 24));
    const catlab::phase::WignerSeries w(s);
    for (int k = 0; k < 5; ++k) {
      const Complex beta = gen.complex(3.0);
      EXPECT_LE(std::abs(w(beta).value), 2 / kPi + 1e-10);
      EXPECT_GE(catlab::phase::husimi(s, beta), -1e-12);
    }
  }
}

TEST(Properties, DisplacementComposesToIdentity) {
  Gen gen(18);
  const catlab::fock::DenseDisplacement d(70);
  for (int c = 0; c < 20; ++c) {
    const auto s = gen.state(12);
    const Complex beta = gen.complex(2.0);
    const Eigen::VectorXcd back = d.apply(-beta, d.apply(beta, s.amplitudes()));
    EXPECT_NEAR((back.head(12) - s.amplitudes()).norm(), 0, 1e-11);
  }
}

TEST(Properties, CutoffMonotoneInMean) {
  Gen gen(19);
  for (int c = 0; c < kCases; ++c) {
    const double a = gen.uniform(0, 200), b = gen.uniform(0, 200);
    EXPECT_LE(catlab::fock::choose_cutoff(std::min(a, b)), catlab::fock::choose_cutoff(std::max(a, b)));
  }
}

}  // namespace
