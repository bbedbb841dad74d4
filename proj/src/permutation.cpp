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

#include "nsholo/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace nsholo {

PermutationOp transposition(int p, int q, int n) {
  if (p == q) throw std::invalid_argument("transposition: qubit indices must differ");
  if (p < 1 || p > n || q < 1 || q > n)
    throw std::invalid_argument("transposition: qubit index out of range");
  const long dim = 1L << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (long s = 0; s < dim; ++s) {
    // Qubit p occupies bit n - p (qubit 1 is the most significant bit).
    const int bp = static_cast<int>((s >> (n - p)) & 1);
    const int bq = static_cast<int>((s >> (n - q)) & 1);
    long t = s;
    if (bp != bq) t = s ^ (1L << (n - p)) ^ (1L << (n - q));
    m(t, s) = 1.0;
  }
  return PermutationOp{{p, q}, n, std::move(m)};
}

std::string to_string(CycleConvention convention) {
  return convention == CycleConvention::LeftToRight ? "left-to-right" : "right-to-left";
}

PermutationOp cycle(const std::vector<int>& indices, int n,
                    CycleConvention convention) {
  if (indices.size() < 3)
    throw std::invalid_argument("cycle: need at least three qubit indices");
  std::set<int> unique(indices.begin(), indices.end());
  if (unique.size() != indices.size())
    throw std::invalid_argument("cycle: repeated qubit index");
  for (int p : indices)
    if (p < 1 || p > n) throw std::invalid_argument("cycle: qubit index out of range");

  const long dim = 1L << n;
  Matrix m = Matrix::Identity(dim, dim);
  if (convention == CycleConvention::LeftToRight) {
    for (std::size_t k = 0; k + 1 < indices.size(); ++k)
      m = m * transposition(indices[k], indices[k + 1], n).matrix;
  } else {
    for (std::size_t k = 0; k + 1 < indices.size(); ++k)
      m = transposition(indices[k], indices[k + 1], n).matrix * m;
  }
  return PermutationOp{indices, n, std::move(m)};
}

Matrix gellmann_matrix(int i) {
  Matrix m = Matrix::Zero(3, 3);
  auto ket_bra = [&m](int a, int b, Complex v) { m(a - 1, b - 1) = v; };
  switch (i) {
    case 1: ket_bra(3, 1, 1.0); ket_bra(1, 3, 1.0); break;
    case 2: ket_bra(3, 1, -imag_unit); ket_bra(1, 3, imag_unit); break;
    case 3: ket_bra(3, 3, 1.0); ket_bra(1, 1, -1.0); break;
    case 4: ket_bra(3, 2, 1.0); ket_bra(2, 3, 1.0); break;
    case 5: ket_bra(3, 2, -imag_unit); ket_bra(2, 3, imag_unit); break;
    case 6: ket_bra(1, 2, 1.0); ket_bra(2, 1, 1.0); break;
    case 7: ket_bra(1, 2, -imag_unit); ket_bra(2, 1, imag_unit); break;
    case 8:
      ket_bra(3, 3, 1.0 / std::sqrt(3.0));
      ket_bra(1, 1, 1.0 / std::sqrt(3.0));
      ket_bra(2, 2, -2.0 / std::sqrt(3.0));
      break;
    default:
      throw std::invalid_argument("gellmann_matrix: index must be in 1..8");
  }
  return m;
}

Matrix gellmann_permutation_form(int i, CycleConvention conv) {
  const int n = 4;
  auto t = [n](int p, int q) { return transposition(p, q, n).matrix; };
  auto c = [n, conv](std::initializer_list<int> idx) {
    return cycle(std::vector<int>(idx), n, conv).matrix;
  };
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);

  switch (i) {
    case 1:
      return (t(2, 3) - t(1, 3)) / s3;
    case 2:
      return imag_unit / s3 * (t(2, 3) * t(1, 3) - t(1, 3) * t(2, 3));
    case 3:
      return (t(1, 3) + t(2, 3) - 2.0 * t(1, 2)) / 3.0;
    case 4:
      return (t(1, 3) - t(2, 3) - 3.0 * t(1, 4) + 3.0 * t(2, 4)) / (2.0 * s6);
    case 5:
      return imag_unit / (2.0 * s6) *
             (2.0 * c({3, 2, 1}) - 2.0 * c({2, 3, 1}) + c({3, 4, 2}) - c({4, 3, 2}) -
              c({3, 4, 1}) + c({4, 3, 1}) + 4.0 * c({2, 4, 1}) - 4.0 * c({4, 2, 1}));
    case 6:
      return 1.0 / (6.0 * s2) *
             (2.0 * t(1, 3) + 2.0 * t(2, 3) - 4.0 * t(1, 2) + 3.0 * c({2, 3, 4, 1}) +
              3.0 * c({3, 4, 2, 1}) + 3.0 * c({4, 3, 2, 1}) + 3.0 * c({2, 4, 3, 1}) -
              6.0 * c({3, 2, 4, 1}) - 6.0 * c({4, 2, 3, 1}));
    case 7:
      return imag_unit / (2.0 * s2) *
             (c({3, 4, 1}) + c({3, 4, 2}) - c({4, 3, 2}) - c({4, 3, 1}));
    case 8:
      return (identity(16) - t(1, 2) - t(1, 3) - t(2, 3)) / s3;
    default:
      throw std::invalid_argument("gellmann_permutation_form: index must be in 1..8");
  }
}

GellMannRealization gellmann_realization(int i, const CodeBasis& basis,
                                         CycleConvention convention) {
  const Matrix& b = basis.isometry();
  const Matrix lhs_code = kron(gellmann_matrix(i), identity(3));  // 9x9
  const Matrix rhs = gellmann_permutation_form(i, convention);
  const Matrix rhs_code = b.adjoint() * rhs * b;
  GellMannRealization out;
  out.index = i;
  out.lhs = b * lhs_code * b.adjoint();
  out.rhs = rhs;
  out.residual = (rhs_code - lhs_code).norm();
  return out;
}

CycleConvention resolve_cycle_convention(const CodeBasis& basis) {
  for (CycleConvention conv :
       {CycleConvention::LeftToRight, CycleConvention::RightToLeft}) {
    bool all_close = true;
    for (int i : {5, 6, 7})
      all_close = all_close &&
                  gellmann_realization(i, basis, conv).residual <= tol::structural;
    if (all_close) return conv;
  }
  throw std::runtime_error(
      "resolve_cycle_convention: neither composition order closes the "
      "cycle-bearing identities");
}

}  // namespace nsholo
