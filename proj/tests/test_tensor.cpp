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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "nsholo/tensor.hpp"

using namespace nsholo;
using namespace nsholo::testing;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("kron identity and basis action") {
  CHECK((kron(identity(2), identity(2)) - identity(4)).norm() == 0.0);

  // (sigma_x x I) |00> = |10>
  const Vector v = kron(sigma_x(), identity(2)) * basis_state(4, 0);
  CHECK((v - basis_state(4, 2)).norm() == doctest::Approx(0.0));

  const Matrix zz = kron(sigma_z(), sigma_z());
  CHECK(zz(0, 0) == Complex(1.0));
  CHECK(zz(1, 1) == Complex(-1.0));
  CHECK(zz(2, 2) == Complex(-1.0));
  CHECK(zz(3, 3) == Complex(1.0));
  CHECK(zz.cwiseAbs().sum() == doctest::Approx(4.0));
}

TEST_CASE("kron is associative and respects the mixed product") {
  std::mt19937_64 rng(7);
  const Matrix a = random_matrix(rng, 2, 3);
  const Matrix b = random_matrix(rng, 3, 2);
  const Matrix c = random_matrix(rng, 2, 2);
  CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() <= 1e-14);

  const Matrix m = random_matrix(rng, 3, 3);
  const Matrix n = random_matrix(rng, 4, 4);
  const Vector v = random_state(rng, 3);
  const Vector w = random_state(rng, 4);
  CHECK((kron(m, n) * kron(v, w) - kron((m * v).eval(), (n * w).eval())).norm() <= 1e-13);
}

TEST_CASE("hermitian_expm Pauli rotations") {
  const Matrix u = hermitian_expm(sigma_x(), pi / 2.0);
  CHECK((u - (-imag_unit * sigma_x())).norm() <= 1e-12);

  std::mt19937_64 rng(11);
  const Matrix h = random_hermitian(rng, 5);
  CHECK((hermitian_expm(h, 0.0) - identity(5)).norm() <= 1e-12);

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  CHECK((hermitian_expm(d, pi) + identity(2)).norm() <= 1e-12);
}

TEST_CASE("hermitian_expm output is unitary") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 5; ++rep) {
    const Matrix h = random_hermitian(rng, 8);
    CHECK(unitarity_error(hermitian_expm(h, 0.7 * rep)) <= 1e-12);
  }
}

TEST_CASE("hermitian_expm rejects non-Hermitian input") {
  std::mt19937_64 rng(17);
  const Matrix a = random_matrix(rng, 3, 3);
  CHECK_THROWS_AS(hermitian_expm(a, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_expm(random_matrix(rng, 2, 3), 1.0), std::invalid_argument);
}

TEST_CASE("partial_trace of Bell state is maximally mixed") {
  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const Matrix rho = bell * bell.adjoint();
  const Matrix reduced = partial_trace(rho, {2, 2}, {0});
  CHECK((reduced - identity(2) / 2.0).norm() <= 1e-14);
}

TEST_CASE("partial_trace of a product state") {
  std::mt19937_64 rng(19);
  const Matrix a = random_density(rng, 2);
  const Matrix b = random_density(rng, 3);
  CHECK((partial_trace(kron(a, b), {2, 3}, {0}) - a).norm() <= 1e-13);
  CHECK((partial_trace(kron(a, b), {2, 3}, {1}) - b).norm() <= 1e-13);
}

TEST_CASE("partial_trace on the NS x NF factorization") {
  // |1><1| x |2><2| on dims [3, 3], keeping the first factor.
  Matrix rho = kron((basis_state(3, 0) * basis_state(3, 0).adjoint()).eval(),
                    (basis_state(3, 1) * basis_state(3, 1).adjoint()).eval());
  const Matrix reduced = partial_trace(rho, {3, 3}, {0});
  CHECK((reduced - basis_state(3, 0) * basis_state(3, 0).adjoint()).norm() <= 1e-14);
}

TEST_CASE("partial_trace over all factors returns the trace") {
  std::mt19937_64 rng(23);
  const Matrix rho = random_density(rng, 8);
  const Matrix scalar = partial_trace(rho, {2, 2, 2}, {});
  REQUIRE(scalar.rows() == 1);
  CHECK(std::abs(scalar(0, 0) - rho.trace()) <= 1e-14);

  // Trace preserved for any kept subset.
  const Matrix reduced = partial_trace(rho, {2, 4}, {1});
  CHECK(std::abs(reduced.trace() - rho.trace()) <= 1e-14);
}

TEST_CASE("partial_trace rejects bad arguments") {
  std::mt19937_64 rng(29);
  const Matrix rho = random_density(rng, 4);
  CHECK_THROWS_AS(partial_trace(rho, {2, 3}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {0, 0}), std::invalid_argument);
}

TEST_CASE("bures_fidelity basics") {
  std::mt19937_64 rng(31);
  const Matrix rho = random_density(rng, 4);
  CHECK(bures_fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));

  const Matrix p0 = basis_state(2, 0) * basis_state(2, 0).adjoint();
  const Matrix p1 = basis_state(2, 1) * basis_state(2, 1).adjoint();
  CHECK(bures_fidelity(p0, p1) <= 1e-8);

  // Pure vs maximally mixed: sqrt(<0| I/2 |0>) = 1/sqrt(2).
  CHECK(bures_fidelity(p0, (identity(2) / 2.0).eval()) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("bures_fidelity is symmetric and matches the pure-state overlap") {
  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 5; ++rep) {
    const Matrix a = random_density(rng, 5);
    const Matrix b = random_density(rng, 5);
    CHECK(std::abs(bures_fidelity(a, b) - bures_fidelity(b, a)) <= 1e-10);

    // Cross-check of the matrix-square-root path against the overlap formula.
    const Vector psi = random_state(rng, 5);
    const double overlap = std::sqrt(psi.dot(b * psi).real());
    CHECK(std::abs(bures_fidelity((psi * psi.adjoint()).eval(), b) - overlap) <= 1e-10);
  }
}

TEST_CASE("bures_fidelity accepts subnormalized states") {
  std::mt19937_64 rng(41);
  const Matrix a = random_density(rng, 3);
  const Matrix b = (0.7 * random_density(rng, 3)).eval();
  const double f = bures_fidelity(a, b);
  CHECK(f >= 0.0);
  CHECK(f <= 1.0 + 1e-8);
}

TEST_CASE("bures_fidelity rejects indefinite input") {
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  const Matrix ok = identity(2) / 2.0;
  CHECK_THROWS_AS(bures_fidelity(ok, bad), std::invalid_argument);
  CHECK_THROWS_AS(bures_fidelity(identity(3) / 3.0, ok), std::invalid_argument);
}

TEST_CASE("density matrix validation") {
  std::mt19937_64 rng(43);
  CHECK_NOTHROW(validate_density_matrix(random_density(rng, 4)));
  CHECK_THROWS_AS(validate_density_matrix((2.0 * identity(2)).eval()),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_density_matrix(random_matrix(rng, 3, 3)),
                  std::invalid_argument);
}

TEST_CASE("phase_invariant_distance ignores a global phase") {
  std::mt19937_64 rng(47);
  const Matrix u = hermitian_expm(random_hermitian(rng, 4), 0.9);
  const Complex phase = std::exp(imag_unit * 1.23);
  CHECK(phase_invariant_distance((phase * u).eval(), u) <= 1e-12);
  CHECK(phase_invariant_distance(u, u) == doctest::Approx(0.0));
}
