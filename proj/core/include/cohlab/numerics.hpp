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

#ifndef COHLAB_NUMERICS_HPP
#define COHLAB_NUMERICS_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cohlab/errors.hpp"

namespace cohlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Module-level tolerances. Double precision leaves at least six digits of
// headroom at the dimensions this library targets (d <= 16).
namespace tol {
inline constexpr double hermitian = 1e-9;
inline constexpr double unitary = 1e-9;
inline constexpr double psd_floor = -1e-9;
inline constexpr double reconstruction = 1e-8;
inline constexpr double rank_cutoff = 1e-12;       // spectral-decomposition eigenvalue cutoff
inline constexpr double gram_relative = 1e-10;     // Kraus linear-independence threshold
inline constexpr double coeff_norm_slack = 1e-12;  // allowed rounding excess over unit norm
inline constexpr double min_singular = 1e-12;      // polar decomposition rank floor
}  // namespace tol

/// Eigensystem of a Hermitian matrix, eigenvalues sorted non-increasing,
/// vectors.col(k) paired with values(k).
struct Spectrum {
  RealVector values;
  Matrix vectors;
};

/// Largest |entry| of a matrix (max-entry norm).
double max_abs(const Matrix& m);

/// Max-entry norm of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

bool is_hermitian(const Matrix& m, double tolerance = tol::hermitian);
bool is_unitary(const Matrix& m, double tolerance = tol::unitary);

/// Throws NotFinite if any entry is NaN or infinite.
void require_finite(const Matrix& m, const char* what);

/// Kronecker product, row-major composite index convention:
/// (a (x) b)[(i,k),(j,l)] = a(i,j) b(k,l) with composite index i*rows(b)+k.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Eigensystem of H, sorted non-increasing. Requires max-entry deviation
/// ||H - H^dag||_max <= tol::hermitian; solves on the symmetrized (H+H^dag)/2.
Spectrum hermitian_eig(const Matrix& h);

/// Singular values of any finite matrix, non-increasing,
/// length min(rows, cols).
RealVector singular_values(const Matrix& m);

/// Principal square root of a PSD Hermitian matrix. Eigenvalues in
/// [tol::psd_floor, 0) are clamped to zero; below the floor throws NotPSD.
Matrix psd_sqrt(const Matrix& p);

/// Unitary polar factor W = U V^dag of a full-rank square M = U S V^dag.
/// W maximizes |tr[W^dag M]| over unitaries, attaining the nuclear norm.
/// Throws RankDeficient when the smallest singular value is at or below
/// tol::min_singular; callers fall back to an SVD-factor product completed
/// arbitrarily on the null space.
Matrix polar_unitary(const Matrix& m);

/// Haar-distributed unitary: QR of a complex-Gaussian matrix with the phases
/// of the triangular factor's diagonal absorbed into Q. Deterministic per
/// seed and platform-stable (fixed generator, fixed Box-Muller transform).
Matrix random_unitary(Index dim, std::uint64_t seed);

/// Unitary of the form exp(iH) with H a seeded random Hermitian matrix.
/// Search-oracle parameterization for suprema over the unitary group.
Matrix random_unitary_exp(Index dim, std::uint64_t seed);

/// Derives a per-use sub-seed from (seed, counter) with a fixed integer hash
/// (splitmix64 finalizer), so one root seed drives many independent streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter);

/// Deterministic random source: mt19937_64 plus an explicit Box-Muller
/// normal transform, so streams do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform();
  /// Standard normal.
  double normal();
  /// Re and Im each standard normal.
  Complex complex_normal();
  /// Integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  Matrix gaussian_matrix(Index rows, Index cols);
  Vector gaussian_vector(Index n);
  /// Haar-uniform pure state (normalized Gaussian vector).
  Vector unit_vector(Index n);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Completes the unset columns of `partial` to a full unitary. `given` lists
/// column indices already holding orthonormal vectors; the rest are filled,
/// in increasing column order, with the first canonical basis vector whose
/// residual against the accepted set exceeds a fixed threshold
/// (Gram-Schmidt with one re-orthogonalization pass). Deterministic.
Matrix complete_unitary_columns(Matrix partial, const std::vector<Index>& given);

/// Convenience: completes an N x q column-orthonormal block placed at
/// columns 0..q-1 to an N x N unitary.
Matrix complete_leading_columns(const Matrix& cols);

}  // namespace cohlab

#endif  // COHLAB_NUMERICS_HPP
