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

#ifndef COHLAB_MEASURES_HPP
#define COHLAB_MEASURES_HPP

#include <cstdint>
#include <string>

#include "cohlab/gluings.hpp"

namespace cohlab {

inline constexpr std::uint64_t kDefaultSeed = 42;

enum class MeasureKind { Lsp, Sp, Glsp, Gsp };

/// Parses "lsp" | "sp" | "glsp" | "gsp"; throws ParseError otherwise.
MeasureKind parse_measure_kind(const std::string& name);
std::string measure_kind_name(MeasureKind kind);

/// Result of a maximization together with the parameters achieving it and a
/// random-search certificate (closed form minus best sampled value; never
/// meaningfully negative).
struct MeasureReport {
  double value = 0.0;
  double certificate_gap = 0.0;
  int samples = 0;
  // Achieving parameters; unused ones are left empty.
  Vector coeff_a;
  Vector coeff_b;
  Matrix contraction;
  Matrix aligner;
  std::string optimizer_note;

  /// One-line human-readable description of the optimizer and certificate.
  std::string summary() const;
};

/// F(LSP): largest eigenvalue of sqrt(sqrt(rho_B) rho_A sqrt(rho_B)).
/// Maximal visibility over local subspace-preserving preparations.
double coherent_fidelity_lsp(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// F(SP): tr sqrt(sqrt(rho_B) rho_A sqrt(rho_B)), the Uhlmann fidelity.
double coherent_fidelity_sp(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// G(LSP): sqrt(lambda_max(rho_A)) * sqrt(lambda_max(rho_B)).
double coherence_lsp(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// G(SP): sum_k sqrt(lambda_k(rho_A)) sqrt(lambda_k(rho_B)) with both
/// spectra sorted non-increasing.
double coherence_sp(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// Top singular value of the Q matrix with the achieving unit vectors
/// (phases fixed so a^dag Q b is real nonnegative), certified against a
/// seeded random unit-vector search.
MeasureReport maximize_lsp_numeric(const KrausChannel& channel_a,
                                   const KrausChannel& channel_b,
                                   const PureState& psi,
                                   std::uint64_t seed = kDefaultSeed,
                                   int samples = 1000);

/// Nuclear norm of Q with the achieving contraction C = V U^dag built on the
/// support (zero-completed when rank deficient), certified against a seeded
/// random contraction search.
MeasureReport maximize_sp_numeric(const KrausChannel& channel_a,
                                  const KrausChannel& channel_b,
                                  const PureState& psi,
                                  std::uint64_t seed = kDefaultSeed,
                                  int samples = 1000);

enum class AlignerMode { Lsp, Sp };

/// Unitary U* = sum_k |v_k^B><v_k^A| over non-increasingly sorted eigenbases;
/// substituting it attains coherence_lsp (mode Lsp) and coherence_sp
/// (mode Sp). Degenerate subspaces are completed deterministically.
Matrix optimal_aligner(const DensityMatrix& rho_a, const DensityMatrix& rho_b,
                       AlignerMode mode);

/// Closed-form measure value for two states plus an optimizer certificate:
/// for Lsp/Sp the numeric maximizer over preparation channels from |0>, for
/// Glsp/Gsp the aligner attainment versus a random-unitary search.
MeasureReport measure_with_certificate(const DensityMatrix& rho_a,
                                       const DensityMatrix& rho_b,
                                       MeasureKind kind,
                                       std::uint64_t seed = kDefaultSeed,
                                       int samples = 1000);

}  // namespace cohlab

#endif  // COHLAB_MEASURES_HPP
