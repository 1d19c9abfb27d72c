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

#ifndef COHLAB_INTERFEROMETER_HPP
#define COHLAB_INTERFEROMETER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cohlab/gluings.hpp"

namespace cohlab {

/// Mach-Zehnder configuration. The beamsplitter convention is fixed:
/// |A> -> (|A>+|B>)/sqrt(2), |B> -> (|A>-|B>)/sqrt(2), both splitters
/// identical. The phase e^{i phi} acts in path A; the optional variable
/// shift acts on the internal state in path B after the glued channel.
struct InterferometerConfig {
  double phase = 0.0;
  std::optional<Matrix> variable_shift;
};

enum class GluingKind { Lsp, Sp };

/// Dilation of a gluing on path (x) system (x) ancilla(s): separate ancillas
/// for the LSP kind (total ancilla = E_A (x) E_B), one shared ancilla for SP.
/// The global unitary is block diagonal in the path basis; block_a/block_b
/// act on system (x) total-ancilla.
struct GluedDilation {
  GluingKind kind = GluingKind::Lsp;
  Index system_dim = 0;
  Index ancilla_dim_a = 0;  // E_A dimension (LSP) or the shared dimension (SP)
  Index ancilla_dim_b = 0;  // E_B dimension (LSP) or the shared dimension (SP)
  Matrix block_a;
  Matrix block_b;
  Vector ancilla_ref;  // |E0> on the total ancilla space

  Index total_ancilla_dim() const { return ancilla_ref.size(); }

  /// Assembled 2N x 2N unitary, path-major ordering, off-path blocks zero.
  Matrix global_unitary() const;

  /// Effective operator K with F(psi) = <psi|K|psi> for this dilation and an
  /// optional shift: K = (I (x) <E0|) U_A^dag (U (x) I) U_B (I (x) |E0>).
  Matrix effective_operator(const std::optional<Matrix>& shift = std::nullopt) const;
};

/// Complex interference amplitude F = v e^{i gamma} with v = |F| and
/// gamma in (-pi, pi] (gamma = 0 when v < 1e-12).
struct InterferencePattern {
  double visibility = 0.0;
  double phase = 0.0;
  Complex amplitude = 0.0;
};

InterferencePattern pattern_from_amplitude(Complex f);

/// Visibility/phase extracted from the exact three-point scan together with
/// the sampled (phi, p_A) pairs.
struct PhaseScanResult {
  InterferencePattern pattern;
  std::vector<std::pair<double, double>> samples;
};

/// Dilation whose simulation reproduces interference_lsp: per side, the
/// canonical dilation composed with an ancilla-output rotation whose |E0>
/// row carries the coefficients (ancilla extended by one dimension; the
/// norm deficit sqrt(1-||a||^2) sits in the extra component).
GluedDilation build_lsp_dilation(const LSPGluing& g);

/// Shared-ancilla dilation reproducing interference_sp: path A canonical,
/// path B composed with an ancilla unitary whose leading block is C^T
/// (feasible for every C C^dag <= I).
GluedDilation build_sp_dilation(const SPGluing& g);

/// Runs |A> (x) |psi> (x) |E0> through beamsplitter, phase in path A, the
/// glued unitary, the optional path-B shift, and the second beamsplitter;
/// returns the path-A detection probability.
double simulate(const GluedDilation& d, const PureState& psi,
                const InterferometerConfig& cfg);

/// Both detection probabilities (p_A, p_B) without clamping; their sum is 1
/// up to rounding for any valid dilation.
std::pair<double, double> detection_probabilities(const GluedDilation& d,
                                                  const PureState& psi,
                                                  const InterferometerConfig& cfg);

/// Samples p_A at phi in {0, pi/2, pi}; Re F = 2 p_A(0) - 1,
/// Im F = 2 p_A(pi/2) - 1. Throws InconsistentPattern if the pi sample fails
/// the consistency check 2 p_A(pi) - 1 = -Re F (within 1e-9), which signals
/// a non-subspace-preserving dilation.
PhaseScanResult phase_scan(const GluedDilation& d, const PureState& psi,
                           const std::optional<Matrix>& shift = std::nullopt);

/// Ensemble average of phase_scan over the spectral decomposition of a mixed
/// input (p_A is linear in rho).
PhaseScanResult phase_scan_density(const GluedDilation& d, const DensityMatrix& rho,
                                   const std::optional<Matrix>& shift = std::nullopt);

/// Least-squares fit of p(phi) = c0 + c1 cos(phi) + c2 sin(phi) to sampled
/// points; F = 2(c1 + i c2). For noisy or oversampled scans; the three-point
/// extraction is exact when the model is exact.
InterferencePattern fit_pattern(const std::vector<std::pair<double, double>>& samples);

/// sup over pure psi of the scanned visibility |<psi|K|psi>| for the
/// dilation's effective operator: spectral radius when K is normal (exact),
/// otherwise the best of kVisibilitySamples seeded pure states refined by
/// coordinate ascent to kVisibilityTol.
double max_visibility_over_inputs(const GluedDilation& d,
                                  const std::optional<Matrix>& shift = std::nullopt);

inline constexpr int kVisibilitySamples = 10000;
inline constexpr double kVisibilityTol = 1e-6;

/// Numerical radius max_psi |<psi|K|psi>| by the same method.
double numerical_radius(const Matrix& k, int samples = kVisibilitySamples,
                        double tolerance = kVisibilityTol,
                        std::uint64_t seed = 0x76697369u);

}  // namespace cohlab

#endif  // COHLAB_INTERFEROMETER_HPP
