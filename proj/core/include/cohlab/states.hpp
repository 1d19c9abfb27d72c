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

#ifndef COHLAB_STATES_HPP
#define COHLAB_STATES_HPP

#include <cstdint>
#include <vector>

#include "cohlab/numerics.hpp"

namespace cohlab {

/// Hermitian, positive-semidefinite, unit-trace matrix. Construct through
/// validate_density (or the generators below) so the invariants hold.
struct DensityMatrix {
  Matrix matrix;

  Index dim() const { return matrix.rows(); }
};

/// Unit-norm state vector.
struct PureState {
  Vector amplitudes;

  Index dim() const { return amplitudes.size(); }
};

/// Set of (not necessarily normalized) vectors |a_k> with
/// sum_k |a_k><a_k| equal to the represented density matrix.
struct PureDecomposition {
  std::vector<Vector> vectors;

  Index dim() const { return vectors.empty() ? 0 : vectors.front().size(); }
  Index size() const { return static_cast<Index>(vectors.size()); }
};

/// Checks Hermiticity, unit trace, and positivity; on success returns the
/// value. Errors name the violated invariant and the measured deviation.
DensityMatrix validate_density(const Matrix& matrix);

/// Checks the unit-norm invariant.
PureState make_pure(const Vector& amplitudes);

/// |psi><psi| as a DensityMatrix.
DensityMatrix pure_to_density(const PureState& psi);

/// Decomposition {sqrt(lambda_k) |v_k>} over eigenpairs with
/// lambda_k > tol::rank_cutoff, sorted non-increasing.
PureDecomposition spectral_decomposition(const DensityMatrix& rho);

/// sum_k |a_k><a_k| of a decomposition (reconstruction oracle).
Matrix decomposition_state(const PureDecomposition& d);

/// Remixed decomposition |a'_j> = sum_k V(j,k) |a_k| for an isometry V
/// (V^dag V = I on the original index count). Represents the same state.
PureDecomposition remix_decomposition(const PureDecomposition& d, const Matrix& v);

/// Overlap matrix M(k,l) = <a_k|b_l>. Its singular values are independent of
/// the decomposition choices and equal the eigenvalues of
/// sqrt(sqrt(rho_B) rho_A sqrt(rho_B)).
Matrix overlap_matrix_m(const PureDecomposition& da, const PureDecomposition& db);

/// Eigenvalues of sqrt(sqrt(rho_B) rho_A sqrt(rho_B)), non-increasing,
/// length dim. Sandwich eigenvalues at or below tol::rank_cutoff count as
/// exact zeros: the square root would otherwise amplify eps-level rounding
/// in true zeros to ~1e-8, swamping the 1e-9 agreement these spectra must
/// keep with the M-matrix singular values.
RealVector fidelity_spectrum(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// tr sqrt(sqrt(rho_B) rho_A sqrt(rho_B)), in [0, 1]; symmetric in its
/// arguments (verified, not enforced).
double uhlmann_fidelity(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// G G^dag / tr[G G^dag] for a dim x rank complex-Gaussian G; deterministic
/// per seed. Throws BadRank unless 1 <= rank <= dim.
DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed);

/// Seeded Haar-uniform pure state.
PureState random_pure(Index dim, std::uint64_t seed);

}  // namespace cohlab

#endif  // COHLAB_STATES_HPP
