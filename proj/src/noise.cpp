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

#include "nsholo/noise.hpp"

#include <cmath>
#include <sstream>

#include "nsholo/collective.hpp"

namespace nsholo {

BrokenErrorOps broken_error_ops(double g) {
  if (g < 0.0) throw std::invalid_argument("broken_error_ops: g must be >= 0");
  const int n = 4;
  BrokenErrorOps ops{Matrix::Zero(16, 16), Matrix::Zero(16, 16), Matrix::Zero(16, 16)};
  for (int p = 1; p <= n; ++p) {
    const double weight = std::exp(-p * g);
    ops.e_plus += weight * pauli_on_qubit(PauliAxis::Plus, p, n);
    ops.e_minus += weight * pauli_on_qubit(PauliAxis::Minus, p, n);
    ops.e_z += weight * pauli_on_qubit(PauliAxis::Z, p, n);
  }
  return ops;
}

namespace {

Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

Matrix dissipator(const Matrix& lop, const Matrix& rho) {
  const Matrix ldag = lop.adjoint();
  return lop * rho * ldag - 0.5 * anticommutator(ldag * lop, rho);
}

}  // namespace

Matrix lindblad_rhs(const Matrix& rho, double t, const Matrix& h_s,
                    const PulseSpec& pulse, const NoiseParams& params) {
  if (rho.rows() != 16 || rho.cols() != 16 || h_s.rows() != 16 || h_s.cols() != 16)
    throw std::invalid_argument("lindblad_rhs: four-qubit (16-dim) operators expected");
  if (!is_hermitian(rho, 1e-10) || !is_hermitian(h_s))
    throw std::invalid_argument("lindblad_rhs: rho and h_s must be Hermitian");

  const BrokenErrorOps ops = broken_error_ops(params.g);
  const Matrix h_t = pulse.envelope(t) * h_s;
  Matrix out = -imag_unit * (h_t * rho - rho * h_t);
  if (params.gamma_phi != 0.0) out += params.gamma_phi * dissipator(ops.e_z, rho);
  if (params.gamma != 0.0) {
    out += params.gamma * (params.nbar + 1.0) * dissipator(ops.e_minus, rho);
    if (params.nbar != 0.0) out += params.gamma * params.nbar * dissipator(ops.e_plus, rho);
  }
  return out;
}

Matrix commutator_superoperator(const Matrix& h) {
  const Eigen::Index d = h.rows();
  const Matrix eye = Matrix::Identity(d, d);
  // vec(AB) column-stacked: vec(H rho) = (I x H) vec(rho),
  // vec(rho H) = (H^T x I) vec(rho).
  return -imag_unit * (kron(eye, h) - kron(h.transpose(), eye));
}

Matrix dissipator_superoperator(const Matrix& lop) {
  const Eigen::Index d = lop.rows();
  const Matrix eye = Matrix::Identity(d, d);
  const Matrix ll = lop.adjoint() * lop;
  return kron(lop.conjugate(), lop) - 0.5 * kron(eye, ll) - 0.5 * kron(ll.transpose(), eye);
}

Matrix dissipation_superoperator(const NoiseParams& params) {
  const BrokenErrorOps ops = broken_error_ops(params.g);
  Matrix d = Matrix::Zero(256, 256);
  if (params.gamma_phi != 0.0) d += params.gamma_phi * dissipator_superoperator(ops.e_z);
  if (params.gamma != 0.0) {
    d += params.gamma * (params.nbar + 1.0) * dissipator_superoperator(ops.e_minus);
    if (params.nbar != 0.0)
      d += params.gamma * params.nbar * dissipator_superoperator(ops.e_plus);
  }
  return d;
}

namespace {

// RK4 on the vectorized batch. The generator is Omega(t) L_H + L_D; for a
// square pulse it is constant and the L_H/L_D split collapses to one gemm.
std::vector<Matrix> rk4_evolve(const std::vector<Matrix>& initial, const Matrix& l_h,
                               const Matrix& l_d, const PulseSpec& pulse, int steps) {
  const Eigen::Index d = initial.front().rows();
  const Eigen::Index d2 = d * d;
  const std::size_t batch = initial.size();

  Matrix x(d2, batch);
  for (std::size_t c = 0; c < batch; ++c)
    x.col(c) = Eigen::Map<const Vector>(initial[c].data(), d2);

  const bool constant = pulse.shape() == PulseShape::Square;
  const double dt = pulse.duration() / steps;

  Matrix g_const;
  if (constant) g_const = pulse.amplitude() * l_h + l_d;

  auto apply = [&](double t, const Matrix& y, Matrix& out) {
    if (constant) {
      out.noalias() = g_const * y;
    } else {
      out.noalias() = pulse.envelope(t) * (l_h * y);
      out.noalias() += l_d * y;
    }
  };

  Matrix k1(d2, batch), k2(d2, batch), k3(d2, batch), k4(d2, batch), stage(d2, batch);
  for (int s = 0; s < steps; ++s) {
    const double t = s * dt;
    apply(t, x, k1);
    stage = x + (dt / 2.0) * k1;
    apply(t + dt / 2.0, stage, k2);
    stage = x + (dt / 2.0) * k2;
    apply(t + dt / 2.0, stage, k3);
    stage = x + dt * k3;
    apply(t + dt, stage, k4);
    x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  std::vector<Matrix> out(batch);
  for (std::size_t c = 0; c < batch; ++c)
    out[c] = Eigen::Map<const Matrix>(x.col(c).data(), d, d);
  return out;
}

}  // namespace

std::vector<Matrix> integrate_batch(const std::vector<Matrix>& initial,
                                    const Matrix& h_normalized, const PulseSpec& pulse,
                                    const NoiseParams& params, int steps) {
  if (steps < 100) throw std::invalid_argument("integrate: need at least 100 steps");
  if (initial.empty()) throw std::invalid_argument("integrate: empty state batch");
  for (const Matrix& rho : initial) {
    if (rho.rows() != 16 || rho.cols() != 16)
      throw std::invalid_argument("integrate: four-qubit (16-dim) states expected");
    if (hermiticity_error(rho) > 1e-10)
      throw std::invalid_argument("integrate: initial state must be Hermitian");
  }
  if (h_normalized.rows() != 16 || !is_hermitian(h_normalized))
    throw std::invalid_argument("integrate: Hamiltonian must be 16-dim Hermitian");

  const Matrix l_h = commutator_superoperator(h_normalized);
  const Matrix l_d = dissipation_superoperator(params);
  return rk4_evolve(initial, l_h, l_d, pulse, steps);
}

Matrix integrate(const Matrix& rho0, const Matrix& h_normalized, const PulseSpec& pulse,
                 const NoiseParams& params, int steps) {
  return integrate_batch({rho0}, h_normalized, pulse, params, steps).front();
}

CheckedIntegration integrate_checked(const Matrix& rho0, const Matrix& h_normalized,
                                     const PulseSpec& pulse, const NoiseParams& params,
                                     int steps) {
  const Matrix coarse = integrate(rho0, h_normalized, pulse, params, steps);
  Matrix fine = integrate(rho0, h_normalized, pulse, params, 2 * steps);
  const double delta = (coarse - fine).norm();
  if (!(delta <= tol::integrated)) {
    std::ostringstream msg;
    msg << "integrate: step-halving check failed (delta = " << delta
        << "); increase steps";
    throw ConvergenceError(msg.str());
  }
  return CheckedIntegration{std::move(fine), delta};
}

}  // namespace nsholo
