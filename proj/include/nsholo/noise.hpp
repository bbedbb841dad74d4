// Copyright 2026 The nsholo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <vector>

#include "nsholo/holonomy.hpp"
#include "nsholo/tensor.hpp"

namespace nsholo {

// Thrown when the step-halving check on the fixed-step integrator fails;
// the caller must increase the step count.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rates are in units of the pulse amplitude; g interpolates between
// collective (g = 0) and fully asymmetric noise.
struct NoiseParams {
  double g = 0.0;
  double gamma_phi = 0.0;  // dephasing rate
  double gamma = 0.0;      // dissipation rate
  double nbar = 0.0;       // mean environmental quanta
};

// Symmetry-broken collective operators E'_alpha = sum_p e^{-p g} sigma_p^alpha
// on the four-qubit register.
struct BrokenErrorOps {
  Matrix e_plus;
  Matrix e_minus;
  Matrix e_z;
};

BrokenErrorOps broken_error_ops(double g);

// Right-hand side of the master equation
//   drho/dt = -i [Omega(t) h_s, rho]
//           + Gamma D[E'_z] rho
//           + gamma (nbar + 1) D[E'_-] rho + gamma nbar D[E'_+] rho
// with D[L] rho = L rho L^dag - {L^dag L, rho} / 2.
Matrix lindblad_rhs(const Matrix& rho, double t, const Matrix& h_s,
                    const PulseSpec& pulse, const NoiseParams& params);

// vec(column-stacked) superoperators: -i[h, .] and D[lop].
Matrix commutator_superoperator(const Matrix& h);
Matrix dissipator_superoperator(const Matrix& lop);

// Full dissipator part of the master equation as a superoperator.
Matrix dissipation_superoperator(const NoiseParams& params);

// Classical fixed-step 4th-order integration of the master equation over
// the pulse window [0, tau]. steps >= 100.
Matrix integrate(const Matrix& rho0, const Matrix& h_normalized,
                 const PulseSpec& pulse, const NoiseParams& params, int steps);

// Same, for several initial states sharing one generator.
std::vector<Matrix> integrate_batch(const std::vector<Matrix>& initial,
                                    const Matrix& h_normalized, const PulseSpec& pulse,
                                    const NoiseParams& params, int steps);

struct CheckedIntegration {
  Matrix rho;             // end state at the doubled step count
  double halving_delta;   // Frobenius distance between steps and 2x steps
};

// Integrates at steps and 2x steps; throws ConvergenceError when the two
// end states disagree beyond the integrated tolerance.
CheckedIntegration integrate_checked(const Matrix& rho0, const Matrix& h_normalized,
                                     const PulseSpec& pulse, const NoiseParams& params,
                                     int steps);

}  // namespace nsholo
