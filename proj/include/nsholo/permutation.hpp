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

#include <string>
#include <vector>

#include "nsholo/collective.hpp"
#include "nsholo/tensor.hpp"

namespace nsholo {

struct PermutationOp {
  std::vector<int> indices;
  int n;
  Matrix matrix;
};

// Two-qubit exchange P_pq = (I + sigma_p . sigma_q) / 2.
PermutationOp transposition(int p, int q, int n);

// Composition order for multi-index operators P_{i1 i2 ... ik}: pairwise
// products taken left-to-right (P_{i1 i2} P_{i2 i3} ...) or right-to-left.
enum class CycleConvention { LeftToRight, RightToLeft };

std::string to_string(CycleConvention convention);

// Product of adjacent-pair transpositions over >= 3 distinct qubits.
PermutationOp cycle(const std::vector<int>& indices, int n,
                    CycleConvention convention);

// Standard 3x3 Gell-Mann matrix lambda_i in the NS ordering |1>, |2>, |3>
// (lambda_1 = |3><1| + h.c., lambda_3 = |3><3| - |1><1|, ...).
Matrix gellmann_matrix(int i);

// The 16x16 permutation combination realizing lambda_i x I_NF on the code
// subspace, e.g. (P_23 - P_13)/sqrt(3) for i = 1.
Matrix gellmann_permutation_form(int i, CycleConvention convention);

// One lambda_i x I_NF = permutation-combination identity, checked as a
// restriction to the code subspace.
struct GellMannRealization {
  int index;
  Matrix lhs;       // 16x16, lambda_i x I_NF embedded in the code subspace
  Matrix rhs;       // 16x16 permutation combination
  double residual;  // Frobenius distance of the two restrictions
};

GellMannRealization gellmann_realization(int i, const CodeBasis& basis,
                                         CycleConvention convention);

// Fixes the composition order empirically: the convention under which the
// cycle-bearing identities (lambda_5, 6, 7) all close within tolerance.
CycleConvention resolve_cycle_convention(const CodeBasis& basis);

}  // namespace nsholo
