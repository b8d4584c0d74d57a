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
#include <limits>
#include <numbers>
#include <string>

#include <gtest/gtest.h>

#include "catlab/errors.hpp"
#include "catlab/model.hpp"
#include "oracles.hpp"

namespace {

using namespace catlab::model;
using catlab::fock::Complex;
namespace oracle = catlab_test::oracle;
constexpr double kPi = std::numbers::pi;

ModelParams dimless(double lambda, double chit, double theta = kPi / 4, double phi = 0.0) {
  return ModelParams::dimensionless(lambda, chit, theta, phi);
}

TEST(ModelParams, PhysicalDerivesDimensionlessGroups) {
  const auto p = ModelParams::physical(2.0, 40.0, Complex(3.0, 1.0), 5.0, 0.3, 0.2);
  EXPECT_EQ(p.lambda(), Complex(1.5, 0.5));
  EXPECT_DOUBLE_EQ(p.chi(), 0.1);
  EXPECT_DOUBLE_EQ(p.chit(), 0.5);
  EXPECT_DOUBLE_EQ(p.dispersive_ratio(), 0.05);
  EXPECT_FALSE(p.dispersive_warning());
  EXPECT_TRUE(ModelParams::physical(1.0, 5.0, 1.0, 1.0, 0, 0).dispersive_warning());
}

TEST(ModelParams, DimensionlessKeepsChitExactly) {
  const auto p = ModelParams::dimensionless(Complex(0.35, 0), 0.2, 0.1, 0.0);
  EXPECT_EQ(p.chit(), 0.2);
  EXPECT_EQ(p.lambda(), Complex(0.35, 0));
  EXPECT_DOUBLE_EQ(p.dispersive_ratio(), 0.01);
  const auto q = p.with_theta_phi(1.0, 2.0);
  EXPECT_EQ(q.theta(), 1.0);
  EXPECT_EQ(q.phi(), 2.0);
  EXPECT_EQ(q.chit(), 0.2);
}

TEST(ModelParams, RejectsInvalidInput) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(ModelParams::physical(0.0, 10, 1, 1, 0, 0), catlab::InvalidArgumentError);
  EXPECT_THROW(ModelParams::physical(-1.0, 10, 1, 1, 0, 0), catlab::InvalidArgumentError);
  EXPECT_THROW(ModelParams::physical(1.0, 0.0, 1, 1, 0, 0), catlab::InvalidArgumentError);
  EXPECT_THROW(ModelParams::physical(1.0, 10, Complex(nan, 0), 1, 0, 0), catlab::InvalidArgumentError);
  EXPECT_THROW(ModelParams::dimensionless(1.0, nan, 0, 0), catlab::InvalidArgumentError);
  EXPECT_THROW(dimless(1.0, 1.0).with_theta_phi(nan, 0), catlab::InvalidArgumentError);
}

TEST(FieldAmplitudes, ClosedForms) {
  const auto p = dimless(1.2, 0.7);
  const auto a = field_amplitudes(p);
  const Complex i(0, 1);
  EXPECT_NEAR(std::abs(a.alpha_f - (-1.2 * (1.0 - std::exp(i * 0.7)))), 0, 1e-15);
  EXPECT_NEAR(std::abs(a.alpha_e - (-1.2 * (1.0 - std::exp(-i * 0.7)))), 0, 1e-15);
  EXPECT_NEAR(a.phase_f, 1.44 * std::sin(0.7), 1e-15);
  EXPECT_NEAR(a.phase_e, -0.7 - 1.44 * std::sin(0.7), 1e-15);
  EXPECT_NEAR(branch_mean_photon(p), std::norm(a.alpha_e), 1e-14);
  EXPECT_NEAR(branch_mean_photon(p), std::norm(a.alpha_f), 1e-14);
}

TEST(BranchState, MatchesOracle) {
  const auto p = dimless(1.5, 2.2, 0.4, 0.9);
  const int n = model_cutoff(p, 1e-16);
  const auto b = oracle::branches(1.5, 2.2, 0.4, 0.9, n);
  EXPECT_NEAR((branch_state(p, Level::e, n).amplitudes() - b.e).norm(), 0, 1e-13);
  EXPECT_NEAR((branch_state(p, Level::f, n).amplitudes() - b.f).norm(), 0, 1e-13);
  const auto j = joint_state(p, n);
  EXPECT_NEAR(std::abs(j.weight_e - b.w_e), 0, 1e-15);
  EXPECT_NEAR(std::abs(j.weight_f - b.w_f), 0, 1e-15);
  EXPECT_NEAR(j.norm_squared(), 1.0, 1e-13);
}

TEST(FieldMixed, MatchesOracle) {
  const auto p = dimless(1.0, 1.0);
  const int n = model_cutoff(p, 1e-16);
  const auto rho = field_mixed(joint_state(p, n));
  const auto want = oracle::mixed(oracle::branches(1.0, 1.0, kPi / 4, 0.0, n));
  EXPECT_NEAR((rho.entries() - want).cwiseAbs().maxCoeff(), 0, 1e-13);
  EXPECT_NEAR(rho.trace(), 1.0, 1e-13);
}

TEST(FieldCat, MatchesOracleStateAndProbability) {
  for (double mu : {0.0, 0.8, kPi / 2}) {
    const auto p = dimless(2.0, 1.0, 0.6, 0.3);
    const int n = model_cutoff(p, 1e-16);
    const auto got = field_cat(joint_state(p, n), mu);
    const auto b = oracle::branches(2.0, 1.0, 0.6, 0.3, n);
    EXPECT_NEAR((got.state.amplitudes() - oracle::cat(b, mu)).norm(), 0, 1e-12) << "mu=" << mu;
    EXPECT_NEAR(got.probability, oracle::cat_probability(b, mu), 1e-13);
  }
}

TEST(FieldCat, ComplementaryOutcomesSumToOne) {
  const auto j = joint_state(dimless(0.8, 2.5, 1.1, -0.4), 40);
  const double mu = 0.37;
  EXPECT_NEAR(field_cat(j, mu).probability + field_cat(j, mu + kPi).probability, 1.0, 1e-12);
}

TEST(FieldCat, PhaseIsWrapped) {
  const auto j = joint_state(dimless(1.0, 1.0), 30);
  const auto a = field_cat(j, 0.5);
  const auto b = field_cat(j, 0.5 + 2 * kPi);
  const auto c = field_cat(j, 0.5 - 4 * kPi);
  EXPECT_NEAR((a.state.amplitudes() - b.state.amplitudes()).norm(), 0, 1e-14);
  EXPECT_NEAR((a.state.amplitudes() - c.state.amplitudes()).norm(), 0, 1e-14);
}

TEST(FieldCat, VacuumDriveProbability) {
  // At lambda = 0 both branches are the vacuum up to the phase e^{-i chi t}.
  const double chit = 1.3, mu = 0.4, theta = 0.5, phi = 0.2;
  const auto p = dimless(0.0, chit, theta, phi);
  const auto got = field_cat(joint_state(p, 16), mu);
  const Complex we = std::sin(theta) * std::polar(1.0, -chit);
  const Complex wf = std::polar(std::cos(theta), phi - mu);
  EXPECT_NEAR(got.probability, std::norm(we + wf) / 2, 1e-15);
  EXPECT_NEAR(std::abs(got.state[0]), 1.0, 1e-15);
}

TEST(FieldCat, DegenerateOutcomeNamesParameters) {
  // chi t = pi: both branches coincide up to a sign, so mu = 0 projects to zero.
  const auto p = dimless(1.0, kPi);
  try {
    field_cat(p, 0.0, 30);
    FAIL() << "expected DegenerateOutcomeError";
  } catch (const catlab::DegenerateOutcomeError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("lambda="), std::string::npos);
    EXPECT_NE(what.find("chi t="), std::string::npos);
  }
  EXPECT_NO_THROW(field_cat(p, kPi / 2, 30));
}

TEST(EffectiveHamiltonian, StructureAndEntries) {
  const auto p = dimless(0.5, 1.0);
  const auto h = effective_hamiltonian_matrix(p, Level::f, 8);
  EXPECT_NEAR((h - h.adjoint()).norm(), 0, 1e-15);
  const double chi = p.chi();
  EXPECT_NEAR(h(3, 3).real(), -chi * (3 + 0.25), 1e-14);
  EXPECT_NEAR(std::abs(h(3, 2) - (-chi * 0.5 * std::sqrt(3.0))), 0, 1e-14);
  EXPECT_EQ(h(5, 2), Complex(0, 0));
  const auto he = effective_hamiltonian_matrix(p, Level::e, 8);
  EXPECT_NEAR(he(3, 3).real(), chi * (1 + 3 + 0.25), 1e-14);
}

TEST(PropagateEffective, MatchesBranchStateWithPhase) {
  for (double lambda : {0.35, 2.0}) {
    for (double chit : {0.2, kPi, 4.0}) {
      const auto p = dimless(lambda, chit);
      const int n = model_cutoff(p);
      for (Level level : {Level::e, Level::f}) {
        const Complex ov = catlab::fock::overlap(branch_state(p, level, n), propagate_effective(p, level, n));
        EXPECT_NEAR(std::abs(ov - 1.0), 0, 1e-10) << "lambda=" << lambda << " chit=" << chit;
      }
    }
  }
}

TEST(PropagateEffective, MatchesRungeKutta) {
  const auto p = dimless(0.8, 1.5);
  const int n = 40;
  const Eigen::MatrixXcd h = effective_hamiltonian_matrix(p, Level::e, n);
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(n);
  psi0[0] = 1.0;
  const Eigen::VectorXcd want = oracle::rk4(h, psi0, p.t(), 20000);
  const auto got = propagate_effective(p, Level::e, 30);
  EXPECT_NEAR((got.amplitudes() - want.head(30)).norm(), 0, 1e-9);
}

TEST(RotatingFrame, RejectsCoarseSteps) {
  const auto p = ModelParams::physical(1.0, 20.0, 1.0, 20.0, kPi / 4, 0);
  EXPECT_EQ(minimum_rotating_frame_steps(p), 20000);
  EXPECT_THROW(propagate_rotating_frame(p, 30, 100), catlab::StabilityError);
}

TEST(RotatingFrame, UndrivenGroundBranchIsInvariant) {
  // With no drive and the atom in f, the vacuum is stationary.
  const auto p = ModelParams::physical(1.0, 20.0, 0.0, 2.0, 0.0, 0.0);
  const auto j = propagate_rotating_frame(p, 16, minimum_rotating_frame_steps(p));
  EXPECT_NEAR(std::abs(j.weight_f), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(j.weight_e), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(j.field_f[0]), 1.0, 1e-12);
}

TEST(RotatingFrame, ApproachesEffectiveModel) {
  const auto p = ModelParams::physical(1.0, 10.0, 1.0, 10.0, kPi / 4, 0);  // chi t = 1
  const int n = model_cutoff(p);
  const auto exact = joint_state(p, n);
  const auto j = propagate_rotating_frame(p, n, minimum_rotating_frame_steps(p));
  EXPECT_NEAR(j.norm_squared(), 1.0, 1e-9);
  EXPECT_GT(joint_fidelity(exact, j), 0.9);
}

}  // namespace
