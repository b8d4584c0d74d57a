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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "catlab/errors.hpp"
#include "catlab/model.hpp"

namespace catlab::model {

namespace {

// Levels added above the requested cutoff while propagating.
constexpr int kPropagatorPadding = 20;

void check_truncation(const Eigen::VectorXcd& full, int cutoff, const char* what) {
  const double lost = full.tail(full.size() - cutoff).squaredNorm();
  if (lost > fock::kConstructorTailLimit) {
    std::ostringstream msg;
    msg << what << ": cutoff " << cutoff << " drops probability " << lost;
    throw CutoffError(msg.str());
  }
}

}  // namespace

Eigen::MatrixXcd effective_hamiltonian_matrix(const ModelParams& params, Level level,
                                              int cutoff) {
  if (cutoff < 1) throw RangeError("effective_hamiltonian_matrix: cutoff must be >= 1");
  const double chi = params.chi();
  const Complex lambda = params.lambda();
  const double sign = level == Level::e ? 1.0 : -1.0;
  const double offset = level == Level::e ? chi : 0.0;

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  for (int n = 0; n < cutoff; ++n) {
    h(n, n) = offset + sign * chi * (n + std::norm(lambda));
    if (n + 1 < cutoff) {
      const double s = std::sqrt(static_cast<double>(n + 1));
      h(n + 1, n) = sign * chi * lambda * s;
      h(n, n + 1) = sign * chi * std::conj(lambda) * s;
    }
  }
  return h;
}

namespace {

// Intermediate states reach mean photon number up to 4|lambda|^2 even when
// the final one is near vacuum, so the space must hold that peak.
int evolution_dimension(const ModelParams& params, int cutoff) {
  const double peak = 4.0 * std::norm(params.lambda());
  return std::max(cutoff, fock::choose_cutoff(peak, 1e-16)) + kPropagatorPadding;
}

}  // namespace

FockVector propagate_effective(const ModelParams& params, Level level, int cutoff) {
  const int dim = evolution_dimension(params, cutoff);
  const Eigen::MatrixXcd h = effective_hamiltonian_matrix(params, level, dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const auto& vecs = solver.eigenvectors();
  const auto& vals = solver.eigenvalues();

  // V exp(-i Lambda t) V^dag |0>
  Eigen::VectorXcd coeff(dim);
  for (int j = 0; j < dim; ++j) {
    coeff[j] = std::conj(vecs(0, j)) * std::polar(1.0, -vals[j] * params.t());
  }
  const Eigen::VectorXcd full = vecs * coeff;
  check_truncation(full, cutoff, "propagate_effective");
  return FockVector::normalized(full.head(cutoff));
}

long minimum_rotating_frame_steps(const ModelParams& params) {
  return static_cast<long>(std::ceil(params.g() * std::abs(params.t()) / kMaxCouplingStep));
}

JointState propagate_rotating_frame(const ModelParams& params, int cutoff, long steps) {
  if (cutoff < 1) throw RangeError("propagate_rotating_frame: cutoff must be >= 1");
  const double g = params.g();
  const double t = params.t();
  if (steps < 1 || g * std::abs(t) / static_cast<double>(steps) > kMaxCouplingStep * (1 + 1e-12)) {
    std::ostringstream msg;
    msg << "propagate_rotating_frame: " << steps << " steps give g*dt = "
        << g * std::abs(t) / static_cast<double>(std::max(steps, 1L)) << " > " << kMaxCouplingStep
        << "; need at least " << minimum_rotating_frame_steps(params);
    throw StabilityError(msg.str());
  }

  const int dim = evolution_dimension(params, cutoff);
  Eigen::MatrixXcd b = params.lambda() * Eigen::MatrixXcd::Identity(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) b(n, n + 1) += std::sqrt(static_cast<double>(n + 1));

  // With b = U S V^dag every step exponential is diagonal in the (U, V)
  // bases; only the phase e^{i Delta t_mid} changes from step to step.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXcd& u = svd.matrixU();
  const Eigen::MatrixXcd& v = svd.matrixV();
  const Eigen::VectorXd& s = svd.singularValues();

  const double tau = t / static_cast<double>(steps);
  Eigen::VectorXd c(dim);
  Eigen::VectorXd sn(dim);
  for (int j = 0; j < dim; ++j) {
    c[j] = std::cos(g * s[j] * tau);
    sn[j] = std::sin(g * s[j] * tau);
  }

  Eigen::VectorXcd xe = Eigen::VectorXcd::Zero(dim);
  Eigen::VectorXcd xf = Eigen::VectorXcd::Zero(dim);
  xe[0] = std::sin(params.theta());
  xf[0] = std::polar(std::cos(params.theta()), params.phi());
  Eigen::VectorXcd ye = u.adjoint() * xe;
  Eigen::VectorXcd yf = v.adjoint() * xf;

  const Complex minus_i(0.0, -1.0);
  const double delta = params.delta();
  for (long k = 0; k < steps; ++k) {
    const double t_mid = (static_cast<double>(k) + 0.5) * tau;
    const Complex ph = std::polar(1.0, delta * t_mid);
    const Complex phc = std::conj(ph);
    for (int j = 0; j < dim; ++j) {
      const Complex e = ye[j];
      const Complex f = yf[j];
      ye[j] = c[j] * e + minus_i * ph * sn[j] * f;
      yf[j] = minus_i * phc * sn[j] * e + c[j] * f;
    }
  }

  const Eigen::VectorXcd full_e = u * ye;
  const Eigen::VectorXcd full_f = v * yf;
  check_truncation(full_e, cutoff, "propagate_rotating_frame");
  check_truncation(full_f, cutoff, "propagate_rotating_frame");

  auto split = [cutoff](const Eigen::VectorXcd& full, FockVector& field, Complex& weight) {
    const Eigen::VectorXcd head = full.head(cutoff);
    const double norm = head.norm();
    if (norm < 1e-150) {
      field = fock::fock_state(0, cutoff);
      weight = 0.0;
      return;
    }
    field = FockVector(head / norm);
    weight = norm;
  };
  JointState out{fock::fock_state(0, cutoff), fock::fock_state(0, cutoff), 0.0, 0.0};
  split(full_e, out.field_e, out.weight_e);
  split(full_f, out.field_f, out.weight_f);
  return out;
}

}  // namespace catlab::model
