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

#include "nsholo/tensor.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nsholo {

Matrix sigma_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Matrix sigma_y() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = -imag_unit;
  m(1, 0) = imag_unit;
  return m;
}

Matrix sigma_z() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

Matrix sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return c;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector c(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    c.segment(i * b.size(), b.size()) = a(i) * b;
  return c;
}

double hermiticity_error(const Matrix& m) {
  return (m - m.adjoint()).norm();
}

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return hermiticity_error(m) <= tolerance * std::max(1.0, m.norm());
}

double unitarity_error(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.cols(), u.cols())).norm();
}

double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      ((hermitian + hermitian.adjoint()) / 2.0).eval());
  return es.eigenvalues().minCoeff();
}

Matrix hermitian_expm(const Matrix& h, double angle) {
  if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_expm: matrix not square");
  if (!is_hermitian(h)) throw std::invalid_argument("hermitian_expm: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(((h + h.adjoint()) / 2.0).eval());
  const auto& evals = es.eigenvalues();
  Vector phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k)
    phases(k) = std::exp(-imag_unit * angle * evals(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
  long total = 1;
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("partial_trace: factor dimensions must be positive");
    total *= d;
  }
  if (rho.rows() != rho.cols() || rho.rows() != total)
    throw std::invalid_argument("partial_trace: dims do not match operator dimension");

  const int f = static_cast<int>(dims.size());
  std::vector<bool> kept(f, false);
  for (int k : keep) {
    if (k < 0 || k >= f) throw std::invalid_argument("partial_trace: keep index out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: duplicate keep index");
    kept[k] = true;
  }

  long dim_keep = 1;
  for (int i = 0; i < f; ++i)
    if (kept[i]) dim_keep *= dims[i];

  // Row-major factor strides: factor 0 is the leftmost (most significant).
  std::vector<long> stride(f, 1);
  for (int i = f - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  std::vector<int> ri(f), ci(f);
  for (long r = 0; r < total; ++r) {
    for (int i = 0; i < f; ++i) ri[i] = static_cast<int>((r / stride[i]) % dims[i]);
    for (long c = 0; c < total; ++c) {
      for (int i = 0; i < f; ++i) ci[i] = static_cast<int>((c / stride[i]) % dims[i]);
      bool diagonal_on_traced = true;
      for (int i = 0; i < f; ++i)
        if (!kept[i] && ri[i] != ci[i]) { diagonal_on_traced = false; break; }
      if (!diagonal_on_traced) continue;
      long rk = 0, ck = 0;
      for (int i = 0; i < f; ++i) {
        if (!kept[i]) continue;
        rk = rk * dims[i] + ri[i];
        ck = ck * dims[i] + ci[i];
      }
      out(rk, ck) += rho(r, c);
    }
  }
  return out;
}

namespace {

// Eigenvalues below the eigensolver's noise floor are exact zeros for our
// purposes; sqrt is infinitely steep at 0, so clamping them keeps the
// rank-deficient case (pure states) accurate.
double noise_floor(const Eigen::VectorXd& evals) {
  const double scale = evals.cwiseAbs().maxCoeff();
  return scale * static_cast<double>(evals.size()) *
         std::numeric_limits<double>::epsilon();
}

// PSD square root with small negative eigenvalues clamped to zero.
Matrix psd_sqrt(const Matrix& m, double neg_tolerance) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(((m + m.adjoint()) / 2.0).eval());
  const auto& evals = es.eigenvalues();
  if (evals.minCoeff() < -neg_tolerance)
    throw std::invalid_argument("bures_fidelity: state has a negative eigenvalue beyond tolerance");
  const double floor = noise_floor(evals);
  Vector roots(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k)
    roots(k) = evals(k) > floor ? std::sqrt(evals(k)) : 0.0;
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double bures_fidelity(const Matrix& rho_id, const Matrix& rho_f) {
  if (rho_id.rows() != rho_f.rows() || rho_id.cols() != rho_f.cols())
    throw std::invalid_argument("bures_fidelity: dimension mismatch");
  if (hermiticity_error(rho_id) > 1e-10 || hermiticity_error(rho_f) > 1e-10)
    throw std::invalid_argument("bures_fidelity: input not Hermitian");

  const Matrix root_f = psd_sqrt(rho_f, 1e-8);
  const Matrix inner = root_f * rho_id * root_f;
  Eigen::SelfAdjointEigenSolver<Matrix> es(((inner + inner.adjoint()) / 2.0).eval());
  const auto& evals = es.eigenvalues();
  if (evals.minCoeff() < -1e-8)
    throw std::invalid_argument("bures_fidelity: state has a negative eigenvalue beyond tolerance");
  const double floor = noise_floor(evals);
  double f = 0.0;
  for (Eigen::Index k = 0; k < evals.size(); ++k)
    if (evals(k) > floor) f += std::sqrt(evals(k));
  return f;
}

double phase_invariant_distance(const Matrix& u, const Matrix& target) {
  if (u.rows() != target.rows() || u.cols() != target.cols())
    throw std::invalid_argument("phase_invariant_distance: dimension mismatch");
  return 1.0 - std::abs((target.adjoint() * u).trace()) / static_cast<double>(u.rows());
}

void validate_density_matrix(const Matrix& rho) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("density matrix not square");
  if (hermiticity_error(rho) > 1e-10)
    throw std::invalid_argument("density matrix not Hermitian within 1e-10");
  const Complex tr = rho.trace();
  if (std::abs(tr.imag()) > 1e-10 || tr.real() < -1e-10 || tr.real() > 1.0 + 1e-10)
    throw std::invalid_argument("density matrix trace outside [0, 1]");
  if (min_eigenvalue(rho) < -1e-8)
    throw std::invalid_argument("density matrix has negative eigenvalue beyond -1e-8");
}

}  // namespace nsholo
