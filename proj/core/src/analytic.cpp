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

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "catlab/errors.hpp"
#include "catlab/witnesses.hpp"

namespace catlab::witness {

namespace {

struct Branches {
  std::array<Complex, 2> alpha;
  std::array<Complex, 2> coeff;  // weight times global phase (times e^{-i mu} for f in a cat)
};

Branches branches(const model::ModelParams& params, double atom_phase, bool cat) {
  const auto amps = model::field_amplitudes(params);
  const Complex we(std::sin(params.theta()), 0.0);
  const Complex wf = std::polar(std::cos(params.theta()), params.phi());
  Branches b;
  b.alpha = {amps.alpha_e, amps.alpha_f};
  b.coeff = {we * std::polar(1.0, amps.phase_e), wf * std::polar(1.0, amps.phase_f)};
  if (cat) b.coeff[1] *= std::polar(1.0, -atom_phase);
  return b;
}

Complex ipow(Complex z, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

// Unnormalized cat norm: sum_{ij} conj(c_i) c_j <alpha_i|alpha_j>.
double cat_norm(const Branches& b) {
  double total = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      total += (std::conj(b.coeff[i]) * b.coeff[j] *
                fock::coherent_overlap(b.alpha[i], b.alpha[j]))
                   .real();
    }
  }
  return total;
}

}  // namespace

double analytic_cat_probability(const model::ModelParams& params, double atom_phase) {
  return 0.5 * cat_norm(branches(params, atom_phase, true));
}

Complex analytic_moment(const model::ModelParams& params, int p, int q, StateKind kind,
                        double atom_phase) {
  if (p < 0 || q < 0) throw RangeError("analytic_moment: orders must be non-negative");
  if (p + q > fock::kMaxMomentOrder) {
    throw UnsupportedOrderError("analytic_moment: order p + q = " + std::to_string(p + q) +
                                " exceeds supported maximum " +
                                std::to_string(fock::kMaxMomentOrder));
  }

  if (kind == StateKind::mixed) {
    const auto b = branches(params, 0.0, false);
    Complex total = 0.0;
    for (int i = 0; i < 2; ++i) {
      total += std::norm(b.coeff[i]) * ipow(std::conj(b.alpha[i]), p) * ipow(b.alpha[i], q);
    }
    return total;
  }

  const auto b = branches(params, atom_phase, true);
  const double norm = cat_norm(b);
  if (0.5 * norm < 1e-12) {
    std::ostringstream msg;
    msg << "analytic_moment: degenerate cat outcome (probability " << 0.5 * norm
        << ") for lambda=" << params.lambda() << ", chi t=" << params.chit()
        << ", atom phase=" << atom_phase;
    throw DegenerateOutcomeError(msg.str());
  }
  // <alpha_i| a^dag^p a^q |alpha_j> = conj(alpha_i)^p alpha_j^q <alpha_i|alpha_j>
  Complex total = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      total += std::conj(b.coeff[i]) * b.coeff[j] * ipow(std::conj(b.alpha[i]), p) *
               ipow(b.alpha[j], q) * fock::coherent_overlap(b.alpha[i], b.alpha[j]);
    }
  }
  return total / norm;
}

}  // namespace catlab::witness
