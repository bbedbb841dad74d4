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

#include "nsholo/holonomy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nsholo {

namespace {

constexpr double pi = std::numbers::pi;

// Composite Simpson rule on [a, b].
template <typename F>
double simpson(F&& f, double a, double b, int intervals) {
  if (b <= a) return 0.0;
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int k = 1; k < intervals; ++k) sum += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace

LambdaCouplings::LambdaCouplings(double j1, double j2, double j4) {
  const double norm = std::sqrt(j1 * j1 + j2 * j2 + j4 * j4);
  if (norm == 0.0)
    throw std::invalid_argument("LambdaCouplings: couplings must not all vanish");
  j1_ = j1 / norm;
  j2_ = j2 / norm;
  j4_ = j4 / norm;
}

LambdaCouplings LambdaCouplings::from_angles(double theta, double phi) {
  return LambdaCouplings(-std::sin(theta / 2.0) * std::cos(phi),
                         std::sin(theta / 2.0) * std::sin(phi),
                         std::cos(theta / 2.0));
}

LambdaCouplings LambdaCouplings::from_axis(const Eigen::Vector3d& n) {
  const Eigen::Vector3d unit = n.normalized();
  const double theta = std::acos(std::clamp(unit.z(), -1.0, 1.0));
  return from_angles(theta, std::atan2(unit.y(), unit.x()));
}

double LambdaCouplings::theta() const {
  // Flipping the sign of all couplings flips the generator's sign but not
  // the gate, so the axis is read from the sign-normalized couplings.
  const double transverse = std::hypot(j1_, j2_);
  return 2.0 * std::atan2(transverse, std::abs(j4_));
}

double LambdaCouplings::phi() const {
  const double sign = j4_ < 0.0 ? -1.0 : 1.0;
  const Complex w = -sign * Complex(j1_, -j2_);
  if (std::abs(w) == 0.0) return 0.0;
  double phi = std::arg(w);
  if (phi < 0.0) phi += 2.0 * pi;
  return phi;
}

Eigen::Vector3d LambdaCouplings::axis() const {
  const double th = theta(), ph = phi();
  return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
}

PulseSpec::PulseSpec(PulseShape shape, double amplitude, double duration)
    : shape_(shape), amplitude_(amplitude), duration_(duration) {
  if (amplitude <= 0.0 || duration <= 0.0)
    throw std::invalid_argument("PulseSpec: amplitude and duration must be positive");
}

PulseSpec PulseSpec::square(double omega) {
  if (omega <= 0.0) throw std::invalid_argument("PulseSpec: amplitude must be positive");
  return PulseSpec(PulseShape::Square, omega, pi / omega);
}

PulseSpec PulseSpec::truncated_gaussian(double tau) {
  if (tau <= 0.0) throw std::invalid_argument("PulseSpec: duration must be positive");
  const double sigma = tau / 6.0;
  const double mass = sigma * std::sqrt(2.0 * pi) * std::erf(3.0 / std::sqrt(2.0));
  return PulseSpec(PulseShape::TruncatedGaussian, pi / mass, tau);
}

double PulseSpec::envelope(double t) const {
  // Quadrature nodes can land a few ulp outside [0, tau]; the window edge
  // is resolved at a relative tolerance so they still count as inside.
  const double edge = duration_ * 1e-12;
  if (t < -edge || t > duration_ + edge) return 0.0;
  if (shape_ == PulseShape::Square) return amplitude_;
  const double sigma = duration_ / 6.0;
  const double u = (t - duration_ / 2.0) / sigma;
  return amplitude_ * std::exp(-0.5 * u * u);
}

double PulseSpec::area() const { return area_to(duration_); }

double PulseSpec::area_to(double t) const {
  t = std::min(std::max(t, 0.0), duration_);
  if (shape_ == PulseShape::Square) return amplitude_ * t;
  return simpson([this](double s) { return envelope(s); }, 0.0, t, 1 << 12);
}

GateResult extract_gate(const Matrix& u, const std::vector<Vector>& computational_basis,
                        const Matrix& target) {
  const int d = static_cast<int>(computational_basis.size());
  if (d == 0) throw std::invalid_argument("extract_gate: empty computational basis");
  if (target.rows() != d || target.cols() != d)
    throw std::invalid_argument("extract_gate: target dimension mismatch");
  Matrix block(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      block(a, b) = computational_basis[a].dot(u * computational_basis[b]);
  Eigen::JacobiSVD<Matrix> svd(block);
  const double smin = svd.singularValues().minCoeff();
  // Population deviations below the structural tolerance are roundoff;
  // sqrt would amplify them to ~1e-8, so they read as exactly zero.
  const double deviation = std::max(0.0, 1.0 - smin * smin);
  GateResult out;
  out.leakage = deviation > tol::structural ? std::sqrt(deviation) : 0.0;
  out.target_distance = phase_invariant_distance(block, target);
  out.logical_block = std::move(block);
  return out;
}

Matrix one_qubit_hamiltonian(const LambdaCouplings& c) {
  const auto conv = CycleConvention::LeftToRight;  // forms 1, 2, 4 carry no cycles
  return c.j1() * gellmann_permutation_form(1, conv) +
         c.j2() * gellmann_permutation_form(2, conv) +
         c.j4() * gellmann_permutation_form(4, conv);
}

Matrix one_qubit_hamiltonian_ns(const LambdaCouplings& c) {
  Matrix h = Matrix::Zero(3, 3);
  h(2, 0) = Complex(c.j1(), -c.j2());
  h(0, 2) = std::conj(h(2, 0));
  h(2, 1) = c.j4();
  h(1, 2) = c.j4();
  return h;
}

Matrix evolve_pulse(const Matrix& h_normalized, const PulseSpec& pulse) {
  if (std::abs(pulse.area() - pi) > 1e-10)
    throw std::invalid_argument("evolve_pulse: pulse area must equal pi");
  return hermitian_expm(h_normalized, pi);
}

Matrix evolve_pulse_sliced(const Matrix& h_normalized, const PulseSpec& pulse,
                           int slices) {
  if (slices < 1) throw std::invalid_argument("evolve_pulse_sliced: need >= 1 slice");
  const double dt = pulse.duration() / slices;
  Matrix u = identity(static_cast<int>(h_normalized.rows()));
  for (int k = 0; k < slices; ++k) {
    const double slice_area =
        simpson([&pulse](double s) { return pulse.envelope(s); }, k * dt, (k + 1) * dt, 8);
    u = hermitian_expm(h_normalized, slice_area) * u;
  }
  return u;
}

double dynamical_phase_along_path(const Matrix& h_normalized, const PulseSpec& pulse,
                                  const std::vector<Vector>& basis, int samples) {
  if (samples < 2) throw std::invalid_argument("dynamical_phase_along_path: samples >= 2");
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t = pulse.duration() * s / (samples - 1);
    const Matrix u = hermitian_expm(h_normalized, pulse.area_to(t));
    std::vector<Vector> evolved;
    evolved.reserve(basis.size());
    for (const Vector& v : basis) evolved.push_back(u * v);
    const double omega_t = pulse.envelope(t);
    for (const Vector& vj : evolved)
      for (const Vector& vk : evolved)
        worst = std::max(worst, std::abs(omega_t * vj.dot(h_normalized * vk)));
  }
  return worst;
}

Matrix axis_gate(const Eigen::Vector3d& n) {
  return n.x() * sigma_x() + n.y() * sigma_y() + n.z() * sigma_z();
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> synthesize_su2(const Matrix& target) {
  if (target.rows() != 2 || target.cols() != 2)
    throw std::invalid_argument("synthesize_su2: target must be 2x2");
  if (unitarity_error(target) > 1e-10)
    throw std::invalid_argument("synthesize_su2: target must be unitary");

  // Remove the global phase: V = target / sqrt(det) has det 1 and the
  // canonical form cos(alpha) I - i sin(alpha) (m . sigma).
  const Matrix v = target / std::sqrt(target.determinant());
  const double cos_alpha = std::clamp(0.5 * v.trace().real(), -1.0, 1.0);
  const double alpha = std::acos(cos_alpha);
  const double sin_alpha = std::sin(alpha);

  Eigen::Vector3d m(0.0, 0.0, 1.0);
  if (sin_alpha > 1e-12) {
    const Matrix ms = imag_unit / (2.0 * sin_alpha) * (v - v.adjoint()).eval();
    m = {ms(1, 0).real(), ms(1, 0).imag(), ms(0, 0).real()};
    m.normalize();
  } else if (cos_alpha < 0.0) {
    // target ~ -I: two opposite reflections about any common axis.
    return {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(-1, 0, 0)};
  } else {
    // target ~ I: the same reflection twice.
    return {Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(0, 0, 1)};
  }

  const Eigen::Vector3d seed =
      std::abs(m.z()) < 0.9 ? Eigen::Vector3d(0, 0, 1) : Eigen::Vector3d(1, 0, 0);
  const Eigen::Vector3d e1 = seed.cross(m).normalized();
  const Eigen::Vector3d e2 = m.cross(e1);  // e1 x e2 = m
  return {std::cos(alpha) * e1 + std::sin(alpha) * e2, e1};
}

Matrix two_qubit_hamiltonian() {
  auto t = [](int p, int q) { return transposition(p, q, 4).matrix; };
  const Matrix lambda4_form = t(1, 3) - t(2, 3) - 3.0 * t(1, 4) + 3.0 * t(2, 4);
  const Matrix left = lambda4_form;
  const Matrix right =
      t(2, 3) - t(1, 3) - 1.0 / (2.0 * std::sqrt(2.0)) * lambda4_form;
  return kron(left, right) / 12.0;
}

namespace {

int ns2_index(int i, int ip) { return (i - 1) * 3 + (ip - 1); }

}  // namespace

Matrix two_qubit_ns_h0() {
  Matrix h = Matrix::Zero(9, 9);
  const double c = 1.0 / std::sqrt(2.0);
  h(ns2_index(3, 3), ns2_index(2, 1)) = c;
  h(ns2_index(3, 3), ns2_index(2, 2)) = -c;
  h(ns2_index(2, 1), ns2_index(3, 3)) = c;
  h(ns2_index(2, 2), ns2_index(3, 3)) = -c;
  return h;
}

Matrix two_qubit_ns_h1() {
  Matrix h = Matrix::Zero(9, 9);
  const double c = 1.0 / std::sqrt(2.0);
  h(ns2_index(3, 1), ns2_index(2, 3)) = c;
  h(ns2_index(3, 2), ns2_index(2, 3)) = -c;
  h(ns2_index(2, 3), ns2_index(3, 1)) = c;
  h(ns2_index(2, 3), ns2_index(3, 2)) = -c;
  return h;
}

Matrix two_qubit_code_isometry(const CodeBasis& basis) {
  Matrix w(256, 81);
  for (int i = 1; i <= 3; ++i)
    for (int ip = 1; ip <= 3; ++ip)
      for (int j = 1; j <= 3; ++j)
        for (int jp = 1; jp <= 3; ++jp) {
          const int ns = ns2_index(i, ip);
          const int nf = ns2_index(j, jp);
          w.col(ns * 9 + nf) = kron(basis.vector(i, j), basis.vector(ip, jp));
        }
  return w;
}

CnotVerification verify_cnot(const CodeBasis& basis) {
  const Matrix h2 = two_qubit_hamiltonian();
  const Matrix h0 = two_qubit_ns_h0();
  const Matrix h1 = two_qubit_ns_h1();
  const Matrix w = two_qubit_code_isometry(basis);

  CnotVerification out;
  out.commutator_norm = (h0 * h1 - h1 * h0).norm();
  out.restriction_residual = (w.adjoint() * h2 * w - kron(h0 + h1, identity(9))).norm();

  const Matrix u = evolve_pulse(h2, PulseSpec::square());

  std::vector<Vector> computational;
  for (int i = 1; i <= 2; ++i)
    for (int ip = 1; ip <= 2; ++ip)
      computational.push_back(kron(basis.vector(i, 1), basis.vector(ip, 1)));

  Matrix cnot = Matrix::Zero(4, 4);
  cnot(0, 0) = 1.0;  // |11><11|
  cnot(1, 1) = 1.0;  // |12><12|
  cnot(2, 3) = 1.0;  // |21><22|
  cnot(3, 2) = 1.0;  // |22><21|
  out.gate = extract_gate(u, computational, cnot);

  const Matrix u1 = hermitian_expm(h1, pi);
  const int m_indices[4] = {ns2_index(1, 1), ns2_index(1, 2), ns2_index(2, 1),
                            ns2_index(2, 2)};
  Matrix u1_block(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) u1_block(a, b) = u1(m_indices[a], m_indices[b]);
  out.h1_identity_residual = (u1_block - identity(4)).norm();

  const Matrix factored = hermitian_expm(h0, pi) * u1;
  out.factorization_residual =
      (w.adjoint() * u * w - kron(factored, identity(9))).norm();

  out.passed = out.gate.target_distance <= tol::integrated &&
               out.commutator_norm <= tol::structural &&
               out.h1_identity_residual <= 1e-10 &&
               out.factorization_residual <= 1e-10 &&
               out.restriction_residual <= tol::structural;
  return out;
}

}  // namespace nsholo
