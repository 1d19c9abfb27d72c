// Copyright 2026 The coherence-lab developers
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

#include <doctest.h>

#include "cohlab/numerics.hpp"
#include "test_helpers.hpp"

using namespace cohlab;
using namespace cohlab::testing;

TEST_SUITE_BEGIN("numerics");

TEST_CASE("hermitian_eig on the identity") {
  const Spectrum s = hermitian_eig(Matrix::Identity(2, 2));
  CHECK(s.values(0) == doctest::Approx(1.0));
  CHECK(s.values(1) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig on sigma_z") {
  const Spectrum s = hermitian_eig(pauli_z());
  CHECK(s.values(0) == doctest::Approx(1.0));
  CHECK(s.values(1) == doctest::Approx(-1.0));
  // eigenvectors match |0>, |1> up to phase
  CHECK(std::abs(Complex(s.vectors.col(0).dot(basis_vector(2, 0)))) ==
        doctest::Approx(1.0));
  CHECK(std::abs(Complex(s.vectors.col(1).dot(basis_vector(2, 1)))) ==
        doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices") {
  for (Index d = 2; d <= 8; ++d) {
    Rng rng(mix_seed(11, static_cast<std::uint64_t>(d)));
    const Matrix g = rng.gaussian_matrix(d, d);
    const Matrix h = (g + g.adjoint()) / 2.0;
    const Spectrum s = hermitian_eig(h);
    const Matrix rebuilt =
        s.vectors * s.values.cast<Complex>().asDiagonal() * s.vectors.adjoint();
    CHECK(max_abs_diff(rebuilt, h) < 1e-9);
    for (Index k = 1; k < d; ++k) {
      CHECK(s.values(k - 1) >= s.values(k));
    }
  }
}

TEST_CASE("hermitian_eig rejects bad input") {
  CHECK_THROWS_AS(hermitian_eig(Matrix::Zero(2, 3)), NotSquare);
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("singular_values of a 2x1 column") {
  Matrix m(2, 1);
  m << 0.5, 0.5;
  const RealVector sv = singular_values(m);
  REQUIRE(sv.size() == 1);
  CHECK(sv(0) == doctest::Approx(kInvSqrt2).epsilon(1e-12));
}

TEST_CASE("singular_values of identity and diagonal") {
  CHECK(singular_values(Matrix::Identity(4, 4)).minCoeff() == doctest::Approx(1.0));
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = 0.5;
  const RealVector sv = singular_values(d);
  CHECK(sv(0) == doctest::Approx(0.5));
  CHECK(sv(1) == doctest::Approx(0.5));
}

TEST_CASE("singular values are unitarily invariant") {
  for (Index d = 2; d <= 6; ++d) {
    Rng rng(mix_seed(23, static_cast<std::uint64_t>(d)));
    const Matrix m = rng.gaussian_matrix(d, d);
    const Matrix v = random_unitary(d, mix_seed(23, 100 + static_cast<std::uint64_t>(d)));
    const Matrix w = random_unitary(d, mix_seed(23, 200 + static_cast<std::uint64_t>(d)));
    const RealVector s1 = singular_values(m);
    const RealVector s2 = singular_values(v * m * w);
    CHECK((s1 - s2).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("psd_sqrt basics") {
  CHECK(max_abs_diff(psd_sqrt(Matrix::Identity(3, 3)), Matrix::Identity(3, 3)) < 1e-12);
  Matrix p = Matrix::Zero(2, 2);
  p(0, 0) = 4.0;
  p(1, 1) = 9.0;
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 2.0;
  expected(1, 1) = 3.0;
  CHECK(max_abs_diff(psd_sqrt(p), expected) < 1e-12);
}

TEST_CASE("psd_sqrt squares back to the input") {
  for (int t = 0; t < 10; ++t) {
    Rng rng(mix_seed(31, static_cast<std::uint64_t>(t)));
    const Matrix g = rng.gaussian_matrix(4, 4);
    const Matrix p = g * g.adjoint();
    const Matrix s = psd_sqrt(p);
    CHECK(max_abs_diff(s * s, p) < 1e-8 * std::max(1.0, max_abs(p)));
    CHECK(max_abs_diff(psd_sqrt(s * s), s) < 1e-8 * std::max(1.0, max_abs(s)));
  }
}

TEST_CASE("psd_sqrt rejects indefinite matrices") {
  Matrix m(2, 2);
  m << 0.5, 0.6, 0.6, 0.5;  // eigenvalues 1.1 and -0.1
  CHECK_THROWS_AS(psd_sqrt(m), NotPSD);
}

TEST_CASE("polar_unitary of a unitary is itself") {
  const Matrix u = random_unitary(3, 77);
  CHECK(max_abs_diff(polar_unitary(u), u) < 1e-9);
}

TEST_CASE("polar_unitary of a positive diagonal is the identity") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 2.0;
  m(1, 1) = 3.0;
  CHECK(max_abs_diff(polar_unitary(m), Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("polar_unitary attains the nuclear norm") {
  for (int t = 0; t < 10; ++t) {
    Rng rng(mix_seed(41, static_cast<std::uint64_t>(t)));
    const Matrix m = rng.gaussian_matrix(4, 4);
    const Matrix w = polar_unitary(m);
    const double nuclear = singular_values(m).sum();
    CHECK(std::abs((w.adjoint() * m).trace().real() - nuclear) < 1e-8);
    CHECK(is_unitary(w, 1e-9));
    // no random unitary does better
    for (int i = 0; i < 200; ++i) {
      const Matrix u = random_unitary(4, mix_seed(static_cast<std::uint64_t>(t), 500 + i));
      CHECK(std::abs((u.adjoint() * m).trace()) <= nuclear + 1e-8);
    }
  }
}

TEST_CASE("polar_unitary rejects rank-deficient input") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  CHECK_THROWS_AS(polar_unitary(m), RankDeficient);
}

TEST_CASE("random_unitary properties") {
  const Matrix u1 = random_unitary(1, 5);
  CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-12);

  for (Index d : {2, 3, 5}) {
    const Matrix u = random_unitary(d, 99);
    CHECK(max_abs(u.adjoint() * u - Matrix::Identity(d, d)) < 1e-9);
  }

  CHECK(max_abs_diff(random_unitary(4, 123), random_unitary(4, 123)) == 0.0);
  CHECK(max_abs_diff(random_unitary(4, 123), random_unitary(4, 124)) > 1e-3);
}

TEST_CASE("random_unitary_exp produces unitaries deterministically") {
  const Matrix u = random_unitary_exp(3, 7);
  CHECK(is_unitary(u, 1e-9));
  CHECK(max_abs_diff(u, random_unitary_exp(3, 7)) == 0.0);
}

TEST_CASE("mix_seed separates streams") {
  CHECK(mix_seed(1, 0) != mix_seed(1, 1));
  CHECK(mix_seed(1, 0) != mix_seed(2, 0));
  CHECK(mix_seed(1, 0) == mix_seed(1, 0));
}

TEST_CASE("complete_unitary_columns keeps the given columns") {
  Matrix partial = Matrix::Zero(4, 4);
  Vector given(4);
  given << 0.5, 0.5, 0.5, 0.5;
  partial.col(2) = given;
  const Matrix u = complete_unitary_columns(partial, {2});
  CHECK(is_unitary(u, 1e-12));
  CHECK((u.col(2) - given).norm() == 0.0);
}

TEST_CASE("kron follows the row-major composite convention") {
  Matrix a(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  const Matrix k = kron(a, Matrix::Identity(3, 3));
  CHECK(k.rows() == 6);
  CHECK(k(0, 0) == Complex(1.0, 0.0));
  CHECK(k(0, 3) == Complex(2.0, 0.0));
  CHECK(k(4, 1) == Complex(3.0, 0.0));
}

TEST_SUITE_END();
