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

#include "nsholo/collective.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nsholo {

namespace {

Matrix single_qubit_op(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X: return sigma_x();
    case PauliAxis::Y: return sigma_y();
    case PauliAxis::Z: return sigma_z();
    case PauliAxis::Plus: return sigma_plus();
    case PauliAxis::Minus: return sigma_minus();
  }
  throw std::invalid_argument("unknown Pauli axis");
}

}  // namespace

Matrix pauli_on_qubit(PauliAxis axis, int p, int n) {
  if (n < 1) throw std::invalid_argument("pauli_on_qubit: register size must be >= 1");
  if (p < 1 || p > n) throw std::invalid_argument("pauli_on_qubit: qubit index out of range");
  Matrix op = (p == 1) ? single_qubit_op(axis) : identity(2);
  for (int q = 2; q <= n; ++q)
    op = kron(op, (q == p) ? single_qubit_op(axis) : identity(2));
  return op;
}

CollectiveErrorOps collective_error_ops(int n) {
  if (n < 1) throw std::invalid_argument("collective_error_ops: register size must be >= 1");
  const long dim = 1L << n;
  CollectiveErrorOps ops{n, Matrix::Zero(dim, dim), Matrix::Zero(dim, dim),
                         Matrix::Zero(dim, dim)};
  for (int p = 1; p <= n; ++p) {
    ops.e_plus += pauli_on_qubit(PauliAxis::Plus, p, n);
    ops.e_minus += pauli_on_qubit(PauliAxis::Minus, p, n);
    ops.e_z += pauli_on_qubit(PauliAxis::Z, p, n);
  }
  return ops;
}

long multiplicity(int n, double j) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("multiplicity: register size must be even and >= 2");
  if (j < 0 || j > n / 2.0 || j != std::floor(j))
    throw std::invalid_argument("multiplicity: total spin must be an integer in [0, n/2]");
  const long jj = static_cast<long>(j);
  // (2j+1) n! / ((n/2+1+j)! (n/2-j)!) evaluated without large factorials:
  // (2j+1)/(n/2+1+j) * binomial(n, n/2-j).
  long binom = 1;
  const long k = n / 2 - jj;
  for (long i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
  const long numer = (2 * jj + 1) * binom;
  const long denom = n / 2 + 1 + jj;
  if (numer % denom != 0)
    throw std::logic_error("multiplicity: non-integer result");
  return numer / denom;
}

namespace {

// Computational strings of an n-qubit register with exactly n_down qubits
// in |1>, in increasing index order. Qubit 1 is the most significant bit.
std::vector<long> strings_with_down_count(int n, int n_down) {
  std::vector<long> out;
  for (long s = 0; s < (1L << n); ++s) {
    int downs = 0;
    for (int b = 0; b < n; ++b) downs += static_cast<int>((s >> b) & 1);
    if (downs == n_down) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<IrrepSector> decompose_total_spin(int n) {
  if (n < 2 || n % 2 != 0 || n > 8)
    throw std::invalid_argument("decompose_total_spin: register size must be even, 2..8");
  const long dim = 1L << n;
  const Matrix raise = collective_error_ops(n).e_plus;
  const Matrix lower = raise.adjoint();

  std::vector<IrrepSector> sectors;
  long accounted = 0;
  for (int jj = n / 2; jj >= 0; --jj) {
    const double j = jj;
    const int d_j = 2 * jj + 1;

    // Highest-weight space: kernel of E_+ within the m = j weight space.
    const int n_down = n / 2 - jj;
    const std::vector<long> weight_basis = strings_with_down_count(n, n_down);
    const long w = static_cast<long>(weight_basis.size());
    Matrix raise_restricted(dim, w);
    for (long c = 0; c < w; ++c) raise_restricted.col(c) = raise.col(weight_basis[c]);

    Eigen::JacobiSVD<Matrix> svd(raise_restricted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    long nullity = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
      if (sv(k) < 1e-8) {
        ++nullity;
      } else if (sv(k) < 1e-3) {
        std::ostringstream msg;
        msg << "decompose_total_spin: ill-conditioned highest-weight space at j = " << j
            << " (singular value " << sv(k) << ")";
        throw std::runtime_error(msg.str());
      }
    }
    if (nullity != multiplicity(n, j)) {
      std::ostringstream msg;
      msg << "decompose_total_spin: found " << nullity << " highest-weight vectors at j = "
          << j << ", expected " << multiplicity(n, j);
      throw std::runtime_error(msg.str());
    }

    const int n_j = static_cast<int>(nullity);
    IrrepSector sector{j, n_j, d_j, Matrix::Zero(dim, static_cast<long>(n_j) * d_j)};
    for (int copy = 0; copy < n_j; ++copy) {
      // Null singular vectors are the trailing columns of V.
      Vector hw = Vector::Zero(dim);
      const Vector coeffs = svd.matrixV().col(w - nullity + copy);
      for (long c = 0; c < w; ++c) hw(weight_basis[c]) += coeffs(c);
      hw /= hw.norm();

      // Lower through the multiplet; lowering preserves orthogonality
      // between copies within each weight.
      Vector v = hw;
      for (int step = 0; step < d_j; ++step) {
        sector.isometry.col(static_cast<long>(copy) * d_j + step) = v;
        if (step + 1 < d_j) {
          v = lower * v;
          v /= v.norm();
        }
      }
    }
    sectors.push_back(std::move(sector));
    accounted += static_cast<long>(n_j) * d_j;
  }
  if (accounted != dim)
    throw std::runtime_error("decompose_total_spin: sector dimensions do not sum to 2^n");
  return sectors;
}

CodeBasis CodeBasis::from_matrix(Matrix m) {
  if (m.rows() != 16 || m.cols() != 9)
    throw std::invalid_argument("CodeBasis: expected a 16x9 matrix");
  return CodeBasis(std::move(m));
}

Vector CodeBasis::vector(int i, int j) const {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw std::invalid_argument("CodeBasis: indices must be in {1, 2, 3}");
  return basis_.col((i - 1) * 3 + (j - 1));
}

CodeBasis four_qubit_code_basis() {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);

  // Computational strings |q1 q2 q3 q4>, qubit 1 the leftmost character.
  auto ket = [](int q1, int q2, int q3, int q4) { return q1 * 8 + q2 * 4 + q3 * 2 + q4; };

  Matrix b = Matrix::Zero(16, 9);
  auto col = [&b](int i, int j) -> Matrix::ColXpr { return b.col((i - 1) * 3 + (j - 1)); };

  col(1, 1)(ket(0, 0, 1, 0)) = 2.0 / s6;
  col(1, 1)(ket(0, 1, 0, 0)) = -1.0 / s6;
  col(1, 1)(ket(1, 0, 0, 0)) = -1.0 / s6;

  col(1, 2)(ket(0, 0, 1, 1)) = 2.0 / (2.0 * s3);
  col(1, 2)(ket(0, 1, 0, 1)) = -1.0 / (2.0 * s3);
  col(1, 2)(ket(1, 0, 0, 1)) = -1.0 / (2.0 * s3);
  col(1, 2)(ket(0, 1, 1, 0)) = 1.0 / (2.0 * s3);
  col(1, 2)(ket(1, 0, 1, 0)) = 1.0 / (2.0 * s3);
  col(1, 2)(ket(1, 1, 0, 0)) = -2.0 / (2.0 * s3);

  col(1, 3)(ket(0, 1, 1, 1)) = 1.0 / s6;
  col(1, 3)(ket(1, 0, 1, 1)) = 1.0 / s6;
  col(1, 3)(ket(1, 1, 0, 1)) = -2.0 / s6;

  col(2, 1)(ket(0, 0, 0, 1)) = 3.0 / (2.0 * s3);
  col(2, 1)(ket(0, 0, 1, 0)) = -1.0 / (2.0 * s3);
  col(2, 1)(ket(0, 1, 0, 0)) = -1.0 / (2.0 * s3);
  col(2, 1)(ket(1, 0, 0, 0)) = -1.0 / (2.0 * s3);

  col(2, 2)(ket(0, 0, 1, 1)) = 1.0 / s6;
  col(2, 2)(ket(0, 1, 0, 1)) = 1.0 / s6;
  col(2, 2)(ket(1, 0, 0, 1)) = 1.0 / s6;
  col(2, 2)(ket(0, 1, 1, 0)) = -1.0 / s6;
  col(2, 2)(ket(1, 0, 1, 0)) = -1.0 / s6;
  col(2, 2)(ket(1, 1, 0, 0)) = -1.0 / s6;

  col(2, 3)(ket(0, 1, 1, 1)) = 1.0 / (2.0 * s3);
  col(2, 3)(ket(1, 0, 1, 1)) = 1.0 / (2.0 * s3);
  col(2, 3)(ket(1, 1, 0, 1)) = 1.0 / (2.0 * s3);
  col(2, 3)(ket(1, 1, 1, 0)) = -3.0 / (2.0 * s3);

  col(3, 1)(ket(0, 1, 0, 0)) = 1.0 / s2;
  col(3, 1)(ket(1, 0, 0, 0)) = -1.0 / s2;

  col(3, 2)(ket(0, 1, 0, 1)) = 0.5;
  col(3, 2)(ket(1, 0, 0, 1)) = -0.5;
  col(3, 2)(ket(0, 1, 1, 0)) = 0.5;
  col(3, 2)(ket(1, 0, 1, 0)) = -0.5;

  col(3, 3)(ket(0, 1, 1, 1)) = 1.0 / s2;
  col(3, 3)(ket(1, 0, 1, 1)) = -1.0 / s2;

  return CodeBasis::from_matrix(std::move(b));
}

NsStructureReport verify_ns_structure(const CodeBasis& basis,
                                      const CollectiveErrorOps& ops) {
  if (ops.n_qubits != 4)
    throw std::invalid_argument("verify_ns_structure: expects 4-qubit operators");
  const Matrix& b = basis.isometry();

  NsStructureReport report;
  std::ostringstream detail;
  const std::array<const Matrix*, 3> errors{&ops.e_plus, &ops.e_minus, &ops.e_z};
  const std::array<const char*, 3> names{"E_+", "E_-", "E_z"};
  std::array<Matrix, 3> extracted;

  for (int a = 0; a < 3; ++a) {
    const Matrix restricted = b.adjoint() * (*errors[a]) * b;  // 9x9

    const double leak = ((*errors[a]) * b - b * restricted).norm();
    report.max_subspace_leakage = std::max(report.max_subspace_leakage, leak);

    Matrix block = restricted.block(0, 0, 3, 3);
    double off = 0.0, spread = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) {
        const Matrix sub = restricted.block(3 * i, 3 * k, 3, 3);
        if (i == k) {
          spread = std::max(spread, (sub - block).norm());
        } else {
          off = std::max(off, sub.cwiseAbs().maxCoeff());
        }
      }
    }
    if (off > tol::structural)
      detail << names[a] << " couples distinct NS indices (max element " << off << "); ";
    if (spread > tol::structural)
      detail << names[a] << " NF blocks differ across NS indices (norm " << spread << "); ";
    report.max_off_block = std::max(report.max_off_block, off);
    report.max_block_spread = std::max(report.max_block_spread, spread);
    extracted[a] = std::move(block);
  }

  report.s_plus = std::move(extracted[0]);
  report.s_minus = std::move(extracted[1]);
  report.s_z = std::move(extracted[2]);
  report.passed = report.max_off_block <= tol::structural &&
                  report.max_block_spread <= tol::structural &&
                  report.max_subspace_leakage <= tol::structural;
  report.detail = detail.str();
  return report;
}

Matrix ns_reduce(const Matrix& rho, const CodeBasis& basis) {
  if (rho.rows() != 16 || rho.cols() != 16)
    throw std::invalid_argument("ns_reduce: expected a 16x16 state");
  const Matrix& b = basis.isometry();
  const Matrix in_code = b.adjoint() * rho * b;  // 9x9 in the (NS, NF) ordering
  return partial_trace(in_code, {3, 3}, {0});
}

}  // namespace nsholo
