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

#ifndef COHLAB_GLUINGS_HPP
#define COHLAB_GLUINGS_HPP

#include <cstdint>
#include <optional>

#include "cohlab/channels.hpp"

namespace cohlab {

/// Local subspace-preserving gluing of two channels: independent dilations
/// with separate ancillas, parameterized by coefficient vectors a, b with
/// ||a||_2, ||b||_2 <= 1 against a fixed Kraus ordering.
struct LSPGluing {
  KrausChannel channel_a;
  KrausChannel channel_b;
  Vector coeff_a;
  Vector coeff_b;

  Index dim() const { return channel_a.dim(); }
};

/// Subspace-preserving gluing: shared ancilla, parameterized by a contraction
/// matrix C of shape (kraus count of B) x (kraus count of A) with
/// C C^dag <= I.
struct SPGluing {
  KrausChannel channel_a;
  KrausChannel channel_b;
  Matrix contraction;

  Index dim() const { return channel_a.dim(); }
};

/// The effective operators weighting each path's coherent amplitude:
/// op_a = sum_k a_k A_k and op_b = sum_l b_l B_l, so that
/// F(rho) = tr[op_a^dag op_b rho].
struct CoherenceOperatorPair {
  Matrix op_a;
  Matrix op_b;
};

/// Validates channel dimensions, coefficient lengths, and the norm bounds.
/// Norms at most tol::coeff_norm_slack above 1 are accepted, not renormalized.
LSPGluing make_lsp_gluing(KrausChannel channel_a, KrausChannel channel_b,
                          Vector coeff_a, Vector coeff_b);

/// Validates shape and the largest-singular-value bound on C; throws
/// ContractionInfeasible when C C^dag <= I fails beyond rounding.
SPGluing make_sp_gluing(KrausChannel channel_a, KrausChannel channel_b,
                        Matrix contraction);

/// The SP gluing with C = b a^dag equivalent to an LSP gluing.
SPGluing lsp_to_sp(const LSPGluing& g);

/// F(rho) = sum_kl b_l conj(a_k) tr[A_k^dag B_l rho]. Evaluated as the
/// literal double sum; the coherence-operator route is the independent check.
Complex interference_lsp(const LSPGluing& g, const DensityMatrix& rho);

/// F(rho) = sum_kl C(l,k) tr[A_k^dag B_l rho].
Complex interference_sp(const SPGluing& g, const DensityMatrix& rho);

/// G(rho, U) = sum_kl C(l,k) tr[A_k^dag U B_l rho]; reduces to
/// interference_sp at U = I. Throws NotUnitary for a non-unitary shift.
Complex generalized_interference(const SPGluing& g, const DensityMatrix& rho,
                                 const Matrix& u);

CoherenceOperatorPair coherence_operators(const LSPGluing& g);

/// Q(k,l) = <psi| A_k^dag B_l |psi>, or <psi| A_k^dag U B_l |psi> when a
/// unitary shift is supplied. For channels feasible for (rho_A, rho_B) the
/// singular values of Q depend only on the states.
Matrix overlap_matrix_q(const KrausChannel& channel_a, const KrausChannel& channel_b,
                        const PureState& psi,
                        const std::optional<Matrix>& shift = std::nullopt);

/// Seeded random matrix rescaled so its largest singular value is 1.
Matrix random_contraction(Index rows, Index cols, std::uint64_t seed);

/// Seeded random gluings over random channels (test generators). Kraus counts
/// are drawn from 1..dim^2 and coefficient norms from (0, 1].
LSPGluing random_lsp_gluing(Index dim, std::uint64_t seed);
SPGluing random_sp_gluing(Index dim, std::uint64_t seed);

}  // namespace cohlab

#endif  // COHLAB_GLUINGS_HPP
