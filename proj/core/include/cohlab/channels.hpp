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

#ifndef COHLAB_CHANNELS_HPP
#define COHLAB_CHANNELS_HPP

#include <cstdint>
#include <vector>

#include "cohlab/states.hpp"

namespace cohlab {

/// Trace-preserving completely positive map in Kraus form:
/// rho -> sum_k K_k rho K_k^dag with sum_k K_k^dag K_k = I.
struct KrausChannel {
  std::vector<Matrix> kraus;

  Index dim() const { return kraus.empty() ? 0 : kraus.front().rows(); }
  Index kraus_count() const { return static_cast<Index>(kraus.size()); }
};

/// Unitary U on system (x) ancilla together with the ancilla reference state,
/// realizing a channel as rho -> tr_E[U (rho (x) |E0><E0|) U^dag].
struct StinespringDilation {
  Index system_dim = 0;
  Index ancilla_dim = 0;
  Matrix global_unitary;
  Vector ancilla_ref;
};

/// Checks equal square dimensions and the completeness relation; throws
/// NotTracePreserving with the measured deviation otherwise.
KrausChannel validate_channel(std::vector<Matrix> kraus);

/// {I_dim}.
KrausChannel identity_channel(Index dim);

/// {U} for a unitary U.
KrausChannel unitary_channel(const Matrix& u);

/// sum_k K_k rho K_k^dag, validated on return.
DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho);

/// Choi matrix (Lambda (x) id)(|Phi><Phi|) with |Phi> = sum_i |i>|i>
/// unnormalized; d^2 x d^2 PSD. Two channels act identically iff their Choi
/// matrices agree.
Matrix choi_matrix(const KrausChannel& channel);

/// Equivalent channel (same Choi matrix) with linearly independent Kraus
/// operators, via eigendecomposition of the Gram matrix tr[K_k^dag K_l] and
/// dropping eigenvalues below tol::gram_relative of the largest.
KrausChannel reduce_to_independent(const KrausChannel& channel);

/// K'_j = sum_k V(j,k) K_k for an isometry V on the Kraus index space
/// (V^dag V = I). Preserves the Choi matrix. Throws NotIsometry.
KrausChannel remix_kraus(const KrausChannel& channel, const Matrix& v);

/// Canonical dilation with ancilla_dim = max(kraus_count, 1):
/// |phi>|E0> -> sum_k (K_k |phi>) |e_k>, completed to a full unitary by
/// deterministic Gram-Schmidt over canonical basis vectors.
StinespringDilation stinespring_dilation(const KrausChannel& channel);

/// tr_E[U (rho (x) |E0><E0|) U^dag] — the channel a dilation represents.
DensityMatrix apply_dilation(const StinespringDilation& d, const DensityMatrix& rho);

/// Channel with Lambda(|psi><psi|) = rho_target: Kraus set {|a_k><psi|} from
/// the spectral decomposition of the target plus completion operators
/// {|a_1/||a_1||><psi_j^perp|} over an orthonormal basis of psi's complement.
/// The completion operators annihilate |psi>.
KrausChannel preparation_channel(const PureState& psi, const DensityMatrix& rho_target);

/// Seeded random channel with `kraus_count` operators, sliced from a Haar
/// isometry C^d -> C^d (x) C^count. Test generator.
KrausChannel random_channel(Index dim, Index kraus_count, std::uint64_t seed);

}  // namespace cohlab

#endif  // COHLAB_CHANNELS_HPP
