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

#include <array>
#include <string>
#include <vector>

#include "nsholo/tensor.hpp"

namespace nsholo {

enum class PauliAxis { X, Y, Z, Plus, Minus };

// I x ... x sigma^axis (slot p) x ... x I on an n-qubit register.
// Qubit 1 is the leftmost tensor factor and the leftmost ket character.
Matrix pauli_on_qubit(PauliAxis axis, int p, int n);

// Collective operators E_alpha = sum_p sigma_p^alpha, alpha = +, -, z.
struct CollectiveErrorOps {
  int n_qubits;
  Matrix e_plus;
  Matrix e_minus;
  Matrix e_z;
};

CollectiveErrorOps collective_error_ops(int n);

// Number of total-spin-j copies in n spin-1/2's:
// (2j+1) n! / ((n/2+1+j)! (n/2-j)!). Even n, integer j only.
long multiplicity(int n, double j);

// One total-spin sector: ns_dim copies of the spin-j irrep. The isometry
// maps C^{ns_dim} x C^{nf_dim} into the 2^n register with column index
// ns * nf_dim + nf; nf = 0 is the highest e_z weight (m = +j).
struct IrrepSector {
  double total_spin;
  int ns_dim;
  int nf_dim;
  Matrix isometry;
};

// Block-diagonalizes the register over total spin, fixing each sector's
// inner basis by lowering from the highest-weight space so that the
// E_alpha act as identity x S_alpha. Even n, n <= 8.
std::vector<IrrepSector> decompose_total_spin(int n);

// The nine C^3 x C^3 vectors |i>|j>_4 of the four-qubit code, i the
// noiseless (NS) index and j the noiseful (NF) index.
class CodeBasis {
 public:
  static CodeBasis from_matrix(Matrix m);

  // 16-dim vector for NS index i and NF index j, both in {1, 2, 3}.
  Vector vector(int i, int j) const;

  // 16 x 9 isometry, column (i-1)*3 + (j-1).
  const Matrix& isometry() const { return basis_; }

 private:
  explicit CodeBasis(Matrix m) : basis_(std::move(m)) {}
  Matrix basis_;
};

CodeBasis four_qubit_code_basis();

// Result of checking E_alpha = I_NS x S_alpha on the code subspace.
struct NsStructureReport {
  bool passed = false;
  double max_off_block = 0.0;       // coupling between distinct NS indices
  double max_block_spread = 0.0;    // disagreement of S_alpha across NS indices
  double max_subspace_leakage = 0.0;  // E_alpha mapping out of the code subspace
  Matrix s_plus, s_minus, s_z;        // extracted 3x3 NF generators
  std::string detail;
};

NsStructureReport verify_ns_structure(const CodeBasis& basis,
                                      const CollectiveErrorOps& ops);

// Projects a 16-dim state onto the code subspace and traces out the NF
// factor. Output trace equals the in-code weight; leakage is not
// renormalized.
Matrix ns_reduce(const Matrix& rho, const CodeBasis& basis);

}  // namespace nsholo
