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

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace nsholo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace tol {
// Structural identities: exact algebra, limited only by roundoff.
inline constexpr double structural = 1e-12;
// Quantities limited by ODE integration accuracy.
inline constexpr double integrated = 1e-8;
}  // namespace tol

inline constexpr Complex imag_unit{0.0, 1.0};

// 2x2 Pauli operators; |0> is the +1 eigenstate of sigma_z.
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();
Matrix sigma_plus();   // |0><1|, raises sigma_z by 2
Matrix sigma_minus();  // |1><0|

Matrix identity(int dim);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

double hermiticity_error(const Matrix& m);
bool is_hermitian(const Matrix& m, double tolerance = tol::structural);
double unitarity_error(const Matrix& u);
double min_eigenvalue(const Matrix& hermitian);

// e^{-i angle h} for Hermitian h, computed by eigendecomposition so the
// result is unitary up to roundoff. Rejects non-Hermitian input.
Matrix hermitian_expm(const Matrix& h, double angle);

// Reduced operator over the tensor factors listed in `keep` (ascending
// factor indices, 0-based, factor 0 leftmost). `keep` may be empty, in
// which case the 1x1 trace is returned.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<int>& keep);

// Bures-Uhlmann fidelity Tr sqrt(rho_f^{1/2} rho_id rho_f^{1/2}).
// Subnormalized states (trace < 1) are accepted as-is; no renormalization.
double bures_fidelity(const Matrix& rho_id, const Matrix& rho_f);

// Gate distance modulo global phase: 1 - |Tr(target^dag u)| / dim.
double phase_invariant_distance(const Matrix& u, const Matrix& target);

// Checks the density-matrix contract: Hermitian to 1e-10, real trace in
// [0, 1 + 1e-10], minimum eigenvalue >= -1e-8. Throws on violation.
void validate_density_matrix(const Matrix& rho);

}  // namespace nsholo
