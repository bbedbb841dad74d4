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

#include <utility>
#include <vector>

#include "nsholo/collective.hpp"
#include "nsholo/permutation.hpp"
#include "nsholo/tensor.hpp"

namespace nsholo {

// Coupling strengths of the three-level drive, normalized so that
// j1^2 + j2^2 + j4^2 = 1 and the pi-area condition is carried entirely by
// the pulse envelope. The rotation axis follows from
// (j1 - i j2)/j4 = -tan(theta/2) e^{i phi}.
class LambdaCouplings {
 public:
  LambdaCouplings(double j1, double j2, double j4);
  static LambdaCouplings from_angles(double theta, double phi);
  static LambdaCouplings from_axis(const Eigen::Vector3d& n);

  double j1() const { return j1_; }
  double j2() const { return j2_; }
  double j4() const { return j4_; }
  double theta() const;
  double phi() const;
  Eigen::Vector3d axis() const;

 private:
  double j1_, j2_, j4_;
};

enum class PulseShape { Square, TruncatedGaussian };

// Pulse envelope Omega(t) on [0, tau] with area pi (a holonomic loop).
class PulseSpec {
 public:
  static PulseSpec square(double omega = 1.0);
  // Gaussian on 6-sigma support [0, tau], peak amplitude fixed by the
  // pi-area condition.
  static PulseSpec truncated_gaussian(double tau);

  PulseShape shape() const { return shape_; }
  double amplitude() const { return amplitude_; }
  double duration() const { return duration_; }
  double envelope(double t) const;
  double area() const;  // numerical quadrature of the envelope
  // Integral of the envelope over [0, t].
  double area_to(double t) const;

 private:
  PulseSpec(PulseShape shape, double amplitude, double duration);
  PulseShape shape_;
  double amplitude_;
  double duration_;
};

// Logical-subspace content of an evolution.
struct GateResult {
  Matrix logical_block;
  double leakage;          // sqrt(1 - min singular value^2) of the block
  double target_distance;  // phase-invariant distance to the target
};

// <basis_a| u |basis_b> block, with leakage and distance to `target`.
GateResult extract_gate(const Matrix& u, const std::vector<Vector>& computational_basis,
                        const Matrix& target);

// Four-qubit one-qubit-gate generator in permutation-operator form, with
// the envelope factored out. Restricts to
// [(j1 - i j2)|3><1| + j4|3><2| + h.c.] x I_NF on the code subspace.
Matrix one_qubit_hamiltonian(const LambdaCouplings& c);

// The 3x3 three-level form of the same generator on the NS factor.
Matrix one_qubit_hamiltonian_ns(const LambdaCouplings& c);

// e^{-i (area) h} for a pi-area pulse; the envelope shape drops out since
// the generator is fixed. Rejects pulses whose area is not pi.
Matrix evolve_pulse(const Matrix& h_normalized, const PulseSpec& pulse);

// Time-ordered product of per-slice exponentials; agrees with
// evolve_pulse up to quadrature error. Used to check shape independence.
Matrix evolve_pulse_sliced(const Matrix& h_normalized, const PulseSpec& pulse,
                           int slices);

// max over sampled t and basis pairs (j,k) of |<psi_j(t)|H(t)|psi_k(t)>|;
// vanishing values certify parallel transport (a purely geometric gate).
double dynamical_phase_along_path(const Matrix& h_normalized, const PulseSpec& pulse,
                                  const std::vector<Vector>& basis, int samples);

// Axes (n1, n2) with (n1.sigma)(n2.sigma) = target up to global phase;
// two pi-pulses, n2 first, realize any SU(2) target.
std::pair<Eigen::Vector3d, Eigen::Vector3d> synthesize_su2(const Matrix& target);

// n . sigma for a unit axis.
Matrix axis_gate(const Eigen::Vector3d& n);

// Eight-qubit two-logical-qubit generator in permutation-operator form
// (envelope factored out); restricts to (H0 + H1) x I_NF.
Matrix two_qubit_hamiltonian();

// The 9x9 NS x NS blocks H0 and H1 of the two-qubit generator.
Matrix two_qubit_ns_h0();
Matrix two_qubit_ns_h1();

// 256 x 81 isometry onto (NS_L x NS_L') x (NF_L x NF_L'), column index
// ns * 9 + nf with ns = 3*(i_L - 1) + (i_L' - 1) and likewise for nf.
Matrix two_qubit_code_isometry(const CodeBasis& basis);

struct CnotVerification {
  GateResult gate;                 // 4x4 block on span{|11>,|12>,|21>,|22>}
  double commutator_norm;          // ||[H0, H1]||_F
  double h1_identity_residual;     // e^{-i pi H1} restricted to M(0) vs identity
  double factorization_residual;   // code-subspace evolution vs e^{-i pi H0} e^{-i pi H1}
  double restriction_residual;     // permutation form vs (H0 + H1) x I_NF
  bool passed;
};

// Evolves the pi-area pulse under the eight-qubit generator and checks
// that the extracted logical block is the CNOT.
CnotVerification verify_cnot(const CodeBasis& basis);

}  // namespace nsholo
