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
#include <string_view>

#include <Eigen/Dense>

#include "catlab/fock.hpp"

namespace catlab::model {

using fock::Complex;
using fock::DensityMatrix;
using fock::FockVector;

/// Atomic level a branch of the field is attached to.
enum class Level { e, f };

std::string_view to_string(Level level);

/// Parameters of the driven dispersive atom-cavity model. hbar = 1, all
/// rates are angular frequencies. The atomic and field frequencies enter
/// only through the detuning Delta = omega_0 - omega_ex under the resonance
/// omega_c = omega_ex, so they are not stored.
class ModelParams {
 public:
  /// Coupling g > 0, detuning Delta != 0, complex drive E, interaction time
  /// t, superposition angle theta and phase phi. Throws
  /// InvalidArgumentError on non-finite input, g <= 0 or Delta == 0.
  static ModelParams physical(double g, double delta, Complex e_drive, double t,
                              double theta, double phi);

  /// Same model addressed by lambda = E/g and chi*t directly, with a
  /// reference coupling and detuning (dispersive ratio g/Delta = 0.01 by
  /// default). chit() returns the given value exactly.
  static ModelParams dimensionless(Complex lambda, double chit, double theta, double phi,
                                   double g = 1.0, double delta = 100.0);

  double g() const { return g_; }
  double delta() const { return delta_; }
  Complex e_drive() const { return e_drive_; }
  double t() const { return t_; }
  double theta() const { return theta_; }
  double phi() const { return phi_; }

  Complex lambda() const { return lambda_; }
  double chi() const { return chi_; }
  double chit() const { return chit_; }

  double dispersive_ratio() const { return g_ / std::abs(delta_); }
  /// g/|Delta| above 0.1: the effective Hamiltonian is a poor approximation.
  bool dispersive_warning() const { return dispersive_ratio() > 0.1; }

  ModelParams with_theta_phi(double theta, double phi) const;

 private:
  ModelParams() = default;

  double g_ = 1.0;
  double delta_ = 1.0;
  Complex e_drive_{};
  double t_ = 0.0;
  double theta_ = 0.0;
  double phi_ = 0.0;
  Complex lambda_{};
  double chi_ = 1.0;
  double chit_ = 0.0;
};

/// Coherent amplitudes and global phases of the two branches:
///   |psi_f> = e^{i phase_f} |alpha_f>,  alpha_f = -lambda (1 - e^{i chi t}),
///   phase_f = |lambda|^2 sin(chi t);
///   |psi_e> = e^{i phase_e} |alpha_e>,  alpha_e = -lambda (1 - e^{-i chi t}),
///   phase_e = -chi t - |lambda|^2 sin(chi t).
struct FieldAmplitudes {
  Complex alpha_e;
  double phase_e;
  Complex alpha_f;
  double phase_f;
};

FieldAmplitudes field_amplitudes(const ModelParams& params);

/// |lambda|^2 (2 - 2 cos chi t), the mean photon number of either branch.
double branch_mean_photon(const ModelParams& params);

/// Cutoff from fock::choose_cutoff at the branch mean photon number.
int model_cutoff(const ModelParams& params, double tail_tol = 1e-12);

/// e^{i phase} |alpha> for the branch attached to the given level.
FockVector branch_state(const ModelParams& params, Level level, int cutoff);

/// sin(theta)|psi_e>|e> + e^{i phi} cos(theta)|psi_f>|f>, stored as two
/// unit-norm field states and their complex weights.
struct JointState {
  FockVector field_e;
  FockVector field_f;
  Complex weight_e;
  Complex weight_f;

  double norm_squared() const;
};

JointState joint_state(const ModelParams& params, int cutoff);

/// |<a|b>|^2 over the joint atom-field space.
double joint_fidelity(const JointState& a, const JointState& b);

/// Partial trace over the atom:
///   |w_e|^2 |psi_e><psi_e| + |w_f|^2 |psi_f><psi_f|.
DensityMatrix field_mixed(const JointState& joint);

struct CatState {
  FockVector state;
  /// Probability of the conditioning outcome.
  double probability;
};

/// Field conditioned on detecting the atom in (|e> + e^{i mu}|f>)/sqrt(2):
/// (w_e psi_e + e^{-i mu} w_f psi_f)/sqrt(2), normalized. The atom phase is
/// wrapped into [0, 2 pi). Throws DegenerateOutcomeError when the outcome
/// probability is below 1e-12.
CatState field_cat(const JointState& joint, double atom_phase);

/// Convenience overload; the error message names lambda and chi t.
CatState field_cat(const ModelParams& params, double atom_phase, int cutoff);

/// Effective Hamiltonian restricted to one atomic level:
///   e: chi [1 + (a^dag a + lambda a^dag + lambda^* a + |lambda|^2)]
///   f: -chi (a^dag a + lambda a^dag + lambda^* a + |lambda|^2)
/// Tridiagonal, Hermitian.
Eigen::MatrixXcd effective_hamiltonian_matrix(const ModelParams& params, Level level, int cutoff);

/// exp(-i H_eff t)|0> through a Hermitian eigendecomposition on a padded
/// space, truncated to the cutoff. Throws CutoffError when the truncated
/// mass exceeds fock::kConstructorTailLimit.
FockVector propagate_effective(const ModelParams& params, Level level, int cutoff);

/// Largest g * (time step) accepted by propagate_rotating_frame.
inline constexpr double kMaxCouplingStep = 1e-3;

/// Smallest step count satisfying kMaxCouplingStep for these parameters.
long minimum_rotating_frame_steps(const ModelParams& params);

/// Time-ordered evolution of |0> (sin theta |e> + e^{i phi} cos theta |f>)
/// under the interaction-picture Hamiltonian
///   H(t) = g (e^{i Delta t} b sigma_+ + e^{-i Delta t} b^dag sigma_-),
///   b = a + lambda,
/// using piecewise-constant midpoint steps, each an exact exponential.
/// Throws StabilityError when g t / steps > kMaxCouplingStep.
JointState propagate_rotating_frame(const ModelParams& params, int cutoff, long steps);

}  // namespace catlab::model
