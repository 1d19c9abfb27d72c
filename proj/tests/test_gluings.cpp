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

#include "cohlab/gluings.hpp"
#include "test_helpers.hpp"

using namespace cohlab;
using namespace cohlab::testing;

namespace {

LSPGluing identity_gluing(Index dim) {
  return make_lsp_gluing(identity_channel(dim), identity_channel(dim), Vector::Ones(1),
                         Vector::Ones(1));
}

LSPGluing fig4b_gluing() {
  const KrausChannel relaxed = validate_channel(
      {kInvSqrt2 * Matrix::Identity(2, 2), kInvSqrt2 * pauli_z()});
  Vector cb = Vector::Zero(2);
  cb(0) = 1.0;
  return make_lsp_gluing(identity_channel(2), relaxed, Vector::Ones(1), cb);
}

LSPGluing fig4a_gluing() {
  const KrausChannel relax = validate_channel({projector(2, 0), projector(2, 1)});
  Vector cb = Vector::Zero(2);
  cb(0) = 1.0;
  return make_lsp_gluing(identity_channel(2), relax, Vector::Ones(1), cb);
}

}  // namespace

TEST_SUITE_BEGIN("gluings");

TEST_CASE("gluing factories validate their inputs") {
  Vector too_long = Vector::Ones(2);
  CHECK_THROWS_AS(make_lsp_gluing(identity_channel(2), identity_channel(2), too_long,
                                  Vector::Ones(1)),
                  DimensionMismatch);
  Vector too_big = Vector::Ones(1) * 1.5;
  CHECK_THROWS_AS(make_lsp_gluing(identity_channel(2), identity_channel(2), too_big,
                                  Vector::Ones(1)),
                  CoefficientNormExceeded);
  CHECK_THROWS_AS(make_sp_gluing(identity_channel(2), identity_channel(2),
                                 2.0 * Matrix::Identity(1, 1)),
                  ContractionInfeasible);
  CHECK_THROWS_AS(make_lsp_gluing(identity_channel(2), identity_channel(3),
                                  Vector::Ones(1), Vector::Ones(1)),
                  DimensionMismatch);
}

TEST_CASE("interference of the empty interferometer is 1") {
  const LSPGluing g = identity_gluing(2);
  for (int t = 0; t < 4; ++t) {
    const DensityMatrix rho =
        random_density(2, 1 + t % 2, mix_seed(90, static_cast<std::uint64_t>(t)));
    CHECK(std::abs(interference_lsp(g, rho) - Complex(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("a unitary channel interferes as tr[rho U]") {
  const Matrix u = random_unitary(2, 17);
  const LSPGluing g = make_lsp_gluing(identity_channel(2), unitary_channel(u),
                                      Vector::Ones(1), Vector::Ones(1));
  const DensityMatrix rho = random_density(2, 2, 18);
  const Complex expected = (rho.matrix * u).trace();
  CHECK(std::abs(interference_lsp(g, rho) - expected) < 1e-12);
}

TEST_CASE("the Hadamard-dilation gluing has amplitude 1/sqrt(2) for every state") {
  const LSPGluing g = fig4b_gluing();
  for (int t = 0; t < 5; ++t) {
    const DensityMatrix rho =
        random_density(2, 1 + t % 2, mix_seed(91, static_cast<std::uint64_t>(t)));
    CHECK(std::abs(interference_lsp(g, rho) - Complex(kInvSqrt2, 0.0)) < 1e-12);
  }
}

TEST_CASE("interference dimension mismatch is rejected") {
  CHECK_THROWS_AS(interference_lsp(identity_gluing(2), maximally_mixed(3)),
                  DimensionMismatch);
}

TEST_CASE("SP with a rank-one contraction reproduces LSP") {
  for (int t = 0; t < 10; ++t) {
    const std::uint64_t seed = mix_seed(92, static_cast<std::uint64_t>(t));
    const LSPGluing g = random_lsp_gluing(2 + t % 2, seed);
    const SPGluing sp = lsp_to_sp(g);
    const DensityMatrix rho =
        random_density(g.dim(), g.dim(), mix_seed(seed, 50));
    CHECK(std::abs(interference_lsp(g, rho) - interference_sp(sp, rho)) < 1e-12);
  }
}

TEST_CASE("correlated relaxation with C = I keeps full interference") {
  const KrausChannel relax = validate_channel({projector(2, 0), projector(2, 1)});
  const SPGluing g = make_sp_gluing(relax, relax, Matrix::Identity(2, 2));
  CHECK(std::abs(interference_sp(g, pure_to_density(plus_state())) - Complex(1.0, 0.0)) <
        1e-12);
}

TEST_CASE("zero contraction kills the interference") {
  const KrausChannel relax = validate_channel({projector(2, 0), projector(2, 1)});
  const SPGluing g = make_sp_gluing(relax, relax, Matrix::Zero(2, 2));
  CHECK(std::abs(interference_sp(g, pure_to_density(plus_state()))) < 1e-15);
}

TEST_CASE("generalized interference reduces to interference_sp at U = I") {
  const SPGluing g = random_sp_gluing(3, 93);
  const DensityMatrix rho = random_density(3, 2, 94);
  CHECK(std::abs(generalized_interference(g, rho, Matrix::Identity(3, 3)) -
                 interference_sp(g, rho)) < 1e-13);
}

TEST_CASE("generalized interference of bare paths is the overlap with U psi") {
  const PureState psi = random_pure(2, 95);
  const Matrix u = random_unitary(2, 96);
  const SPGluing g = make_sp_gluing(identity_channel(2), identity_channel(2),
                                    Matrix::Identity(1, 1));
  const Complex expected = psi.amplitudes.dot(u * psi.amplitudes);
  CHECK(std::abs(generalized_interference(g, pure_to_density(psi), u) - expected) < 1e-12);
}

TEST_CASE("a shift can restore interference between orthogonal preparations") {
  Vector zero = basis_vector(2, 0);
  const PureState psi{zero};
  const KrausChannel prep_zero = preparation_channel(psi, validate_density(projector(2, 0)));
  const KrausChannel prep_one = preparation_channel(psi, validate_density(projector(2, 1)));
  // the aligner sigma_x swaps the preparations back into overlap
  const Matrix q_shifted = overlap_matrix_q(prep_zero, prep_one, psi, pauli_x());
  Eigen::JacobiSVD<Matrix> svd(q_shifted, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Matrix c = svd.matrixV() * svd.matrixU().adjoint();
  const SPGluing g = make_sp_gluing(prep_zero, prep_one, c);
  const Complex value = generalized_interference(g, pure_to_density(psi), pauli_x());
  CHECK(std::abs(value) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("coherence operators of the named gluings") {
  CHECK(max_abs_diff(coherence_operators(fig4a_gluing()).op_b, projector(2, 0)) < 1e-12);
  CHECK(max_abs_diff(coherence_operators(fig4b_gluing()).op_b,
                     kInvSqrt2 * Matrix::Identity(2, 2)) < 1e-12);
  CHECK(max_abs_diff(coherence_operators(identity_gluing(2)).op_a,
                     Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("coherence operators reproduce the interference sum") {
  for (int t = 0; t < 10; ++t) {
    const std::uint64_t seed = mix_seed(97, static_cast<std::uint64_t>(t));
    const LSPGluing g = random_lsp_gluing(2 + t % 2, seed);
    const DensityMatrix rho = random_density(g.dim(), g.dim(), mix_seed(seed, 5));
    const CoherenceOperatorPair ops = coherence_operators(g);
    const Complex via_ops = (ops.op_a.adjoint() * ops.op_b * rho.matrix).trace();
    CHECK(std::abs(via_ops - interference_lsp(g, rho)) < 1e-10);
  }
}

TEST_CASE("overlap_matrix_q golden cases") {
  Vector zero = basis_vector(2, 0);
  const Matrix q_id =
      overlap_matrix_q(identity_channel(2), identity_channel(2), PureState{zero});
  REQUIRE(q_id.rows() == 1);
  CHECK(std::abs(q_id(0, 0) - Complex(1.0, 0.0)) < 1e-12);

  const KrausChannel relax = validate_channel({projector(2, 0), projector(2, 1)});
  const Matrix q = overlap_matrix_q(relax, identity_channel(2), plus_state());
  REQUIRE(q.rows() == 2);
  REQUIRE(q.cols() == 1);
  CHECK(std::abs(q(0, 0) - Complex(0.5, 0.0)) < 1e-12);
  CHECK(std::abs(q(1, 0) - Complex(0.5, 0.0)) < 1e-12);
  CHECK(singular_values(q)(0) == doctest::Approx(kInvSqrt2).epsilon(1e-12));
}

TEST_CASE("a^dag Q b equals the interference function") {
  for (int t = 0; t < 10; ++t) {
    const std::uint64_t seed = mix_seed(98, static_cast<std::uint64_t>(t));
    const LSPGluing g = random_lsp_gluing(2 + t % 2, seed);
    const PureState psi = random_pure(g.dim(), mix_seed(seed, 60));
    const Matrix q = overlap_matrix_q(g.channel_a, g.channel_b, psi);
    const Complex via_q = Complex(g.coeff_a.adjoint() * q * g.coeff_b);
    CHECK(std::abs(via_q - interference_lsp(g, pure_to_density(psi))) < 1e-12);
  }
}

TEST_CASE("interference magnitudes never pass 1") {
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t seed = mix_seed(99, static_cast<std::uint64_t>(t));
    const Index dim = 2 + t % 2;
    const DensityMatrix rho = random_density(dim, dim, mix_seed(seed, 7));
    CHECK(std::abs(interference_lsp(random_lsp_gluing(dim, seed), rho)) <= 1.0 + 1e-9);
    CHECK(std::abs(interference_sp(random_sp_gluing(dim, mix_seed(seed, 8)), rho)) <=
          1.0 + 1e-9);
  }
}

TEST_CASE("interference is linear in the state") {
  const LSPGluing g = random_lsp_gluing(3, 101);
  const DensityMatrix r1 = random_density(3, 3, 102);
  const DensityMatrix r2 = random_density(3, 1, 103);
  const double alpha = 0.37;
  const DensityMatrix mixed{alpha * r1.matrix + (1 - alpha) * r2.matrix};
  const Complex lhs = interference_lsp(g, mixed);
  const Complex rhs = alpha * interference_lsp(g, r1) + (1 - alpha) * interference_lsp(g, r2);
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("Q singular values survive Kraus remixing and channel swaps") {
  for (int t = 0; t < 10; ++t) {
    const std::uint64_t seed = mix_seed(104, static_cast<std::uint64_t>(t));
    const Index dim = 2 + t % 3;
    const DensityMatrix rho_a = random_density(dim, 1 + t % dim, mix_seed(seed, 1));
    const DensityMatrix rho_b = random_density(dim, dim, mix_seed(seed, 2));
    const PureState psi = random_pure(dim, mix_seed(seed, 3));
    const KrausChannel prep_a = preparation_channel(psi, rho_a);
    const KrausChannel prep_b = preparation_channel(psi, rho_b);
    const RealVector sv = singular_values(overlap_matrix_q(prep_a, prep_b, psi));

    const Matrix va =
        random_unitary(prep_a.kraus_count(), mix_seed(seed, 4));
    const RealVector sv_remix = singular_values(
        overlap_matrix_q(remix_kraus(prep_a, va), prep_b, psi));

    const PureState alt = random_pure(dim, mix_seed(seed, 5));
    const RealVector sv_alt = singular_values(overlap_matrix_q(
        preparation_channel(alt, rho_a), preparation_channel(alt, rho_b), alt));

    for (Index k = 0; k < sv.size(); ++k) {
      const double r1 = k < sv_remix.size() ? sv_remix(k) : 0.0;
      const double r2 = k < sv_alt.size() ? sv_alt(k) : 0.0;
      CHECK(std::abs(sv(k) - r1) < 1e-9);
      CHECK(std::abs(sv(k) - r2) < 1e-9);
    }
  }
}

TEST_SUITE_END();
