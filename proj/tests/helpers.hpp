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

#include <random>

#include "nsholo/tensor.hpp"

namespace nsholo::testing {

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(n(rng), n(rng));
  return m;
}

inline Matrix random_hermitian(std::mt19937_64& rng, int dim) {
  const Matrix a = random_matrix(rng, dim, dim);
  return ((a + a.adjoint()) / 2.0).eval();
}

inline Matrix random_density(std::mt19937_64& rng, int dim) {
  const Matrix a = random_matrix(rng, dim, dim);
  Matrix rho = a * a.adjoint();
  return (rho / rho.trace().real()).eval();
}

inline Vector random_state(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vector v(dim);
  for (int k = 0; k < dim; ++k) v(k) = Complex(n(rng), n(rng));
  return (v / v.norm()).eval();
}

inline Vector basis_state(int dim, int k) {
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return v;
}

}  // namespace nsholo::testing
