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

#include "catlab/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "catlab/errors.hpp"

namespace catlab::model {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidArgumentError(std::string("ModelParams: ") + name + " must be finite");
  }
}

double wrap_phase(double mu) {
  if (!std::isfinite(mu)) throw RangeError("field_cat: atom phase must be finite");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(mu, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

}  // namespace

std::string_view to_string(Level level) { return level == Level::e ? "e" : "f"; }

ModelParams ModelParams::physical(double g, double delta, Complex e_drive, double t,
                                  double theta, double phi) {
  require_finite(g, "g");
  require_finite(delta, "Delta");
  require_finite(e_drive.real(), "E_drive");
  require_finite(e_drive.imag(), "E_drive");
  require_finite(t, "t");
  require_finite(theta, "theta");
  require_finite(phi, "phi");
  if (!(g > 0.0)) throw InvalidArgumentError("ModelParams: coupling g must be > 0");
  if (delta == 0.0) throw InvalidArgumentError("ModelParams: detuning Delta must be non-zero");

  ModelParams p;
  p.g_ = g;
  p.delta_ = delta;
  p.e_drive_ = e_drive;
  p.t_ = t;
  p.theta_ = theta;
  p.phi_ = phi;
  p.lambda_ = e_drive / g;
  p.chi_ = g * g / delta;
  p.chit_ = p.chi_ * t;
  return p;
}

ModelParams ModelParams::dimensionless(Complex lambda, double chit, double theta, double phi,
                                       double g, double delta) {
  require_finite(lambda.real(), "lambda");
  require_finite(lambda.imag(), "lambda");
  require_finite(chit, "chi t");
  const double chi = g * g / delta;
  ModelParams p = physical(g, delta, lambda * g, chit / chi, theta, phi);
  p.lambda_ = lambda;
  p.chit_ = chit;
  return p;
}

ModelParams ModelParams::with_theta_phi(double theta, double phi) const {
  require_finite(theta, "theta");
  require_finite(phi, "phi");
  ModelParams p = *this;
  p.theta_ = theta;
  p.phi_ = phi;
  return p;
}

FieldAmplitudes field_amplitudes(const ModelParams& params) {
  const Complex lambda = params.lambda();
  const double chit = params.chit();
  const double shift = std::norm(lambda) * std::sin(chit);
  FieldAmplitudes out{};
  out.alpha_f = -lambda * (1.0 - std::polar(1.0, chit));
  out.phase_f = shift;
  out.alpha_e = -lambda * (1.0 - std::polar(1.0, -chit));
  out.phase_e = -chit - shift;
  return out;
}

double branch_mean_photon(const ModelParams& params) {
  return std::norm(params.lambda()) * (2.0 - 2.0 * std::cos(params.chit()));
}

int model_cutoff(const ModelParams& params, double tail_tol) {
  return fock::choose_cutoff(branch_mean_photon(params), tail_tol);
}

FockVector branch_state(const ModelParams& params, Level level, int cutoff) {
  const auto amps = field_amplitudes(params);
  if (level == Level::e) {
    return fock::coherent_state(amps.alpha_e, cutoff).with_global_phase(amps.phase_e);
  }
  return fock::coherent_state(amps.alpha_f, cutoff).with_global_phase(amps.phase_f);
}

double JointState::norm_squared() const {
  return std::norm(weight_e) * field_e.norm_squared() +
         std::norm(weight_f) * field_f.norm_squared();
}

JointState joint_state(const ModelParams& params, int cutoff) {
  return JointState{
      branch_state(params, Level::e, cutoff),
      branch_state(params, Level::f, cutoff),
      Complex(std::sin(params.theta()), 0.0),
      std::polar(std::cos(params.theta()), params.phi()),
  };
}

double joint_fidelity(const JointState& a, const JointState& b) {
  const Complex amp = std::conj(a.weight_e) * b.weight_e * fock::overlap(a.field_e, b.field_e) +
                      std::conj(a.weight_f) * b.weight_f * fock::overlap(a.field_f, b.field_f);
  return std::norm(amp);
}

DensityMatrix field_mixed(const JointState& joint) {
  const double pe = std::norm(joint.weight_e);
  const double pf = std::norm(joint.weight_f);
  const double total = pe + pf;
  const double weights[] = {pe / total, pf / total};
  const FockVector states[] = {joint.field_e, joint.field_f};
  return fock::mix(weights, states);
}

CatState field_cat(const JointState& joint, double atom_phase) {
  const double mu = wrap_phase(atom_phase);
  if (joint.field_e.cutoff() != joint.field_f.cutoff()) {
    throw DimensionError("field_cat: branch cutoffs differ");
  }
  const Eigen::VectorXcd v =
      (joint.weight_e * joint.field_e.amplitudes() +
       std::polar(1.0, -mu) * joint.weight_f * joint.field_f.amplitudes()) /
      std::numbers::sqrt2;
  const double probability = v.squaredNorm();
  if (probability < 1e-12) {
    std::ostringstream msg;
    msg << "field_cat: degenerate outcome (probability " << probability << ") for atom phase "
        << mu << ", weights " << joint.weight_e << " / " << joint.weight_f;
    throw DegenerateOutcomeError(msg.str());
  }
  return CatState{FockVector::normalized(v), probability};
}

CatState field_cat(const ModelParams& params, double atom_phase, int cutoff) {
  try {
    return field_cat(joint_state(params, cutoff), atom_phase);
  } catch (const DegenerateOutcomeError& e) {
    std::ostringstream msg;
    msg << e.what() << " [lambda=" << params.lambda() << ", chi t=" << params.chit()
        << ", theta=" << params.theta() << ", phi=" << params.phi() << "]";
    throw DegenerateOutcomeError(msg.str());
  }
}

}  // namespace catlab::model
