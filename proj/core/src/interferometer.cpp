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

#include "cohlab/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cohlab/states.hpp"

namespace cohlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPatternConsistency = 1e-9;
constexpr double kZeroVisibility = 1e-12;

/// Canonical dilation unitary on system (x) ancilla(m >= kraus count):
/// |phi>|e0> -> sum_k (K_k|phi>)|e_k>, completed deterministically.
Matrix canonical_dilation_unitary(const KrausChannel& channel, Index m) {
  const Index d = channel.dim();
  const Index n = d * m;
  Matrix partial = Matrix::Zero(n, n);
  std::vector<Index> given;
  for (Index s = 0; s < d; ++s) {
    Vector col = Vector::Zero(n);
    for (Index k = 0; k < channel.kraus_count(); ++k) {
      const Matrix& kraus = channel.kraus[static_cast<std::size_t>(k)];
      for (Index t = 0; t < d; ++t) {
        col(t * m + k) += kraus(t, s);
      }
    }
    partial.col(s * m) = col;
    given.push_back(s * m);
  }
  return complete_unitary_columns(std::move(partial), given);
}

/// Unitary whose first row equals the given unit vector.
Matrix unitary_with_first_row(const Vector& row) {
  const Index m = row.size();
  Matrix partial = Matrix::Zero(m, m);
  partial.col(0) = row.conjugate();
  return complete_unitary_columns(std::move(partial), {0}).adjoint();
}

/// Dilation side for an LSP gluing: ancilla dim r+1, canonical dilation
/// composed with the ancilla rotation whose |E0> row is (a, sqrt(1-||a||^2)).
Matrix lsp_side_unitary(const KrausChannel& channel, const Vector& coeff, Index m) {
  const double pad2 = std::max(0.0, 1.0 - coeff.squaredNorm());
  Vector row(m);
  row.head(coeff.size()) = coeff;
  row(m - 1) = std::sqrt(pad2);
  row /= row.norm();
  const Matrix w = unitary_with_first_row(row);
  const Matrix u_can = canonical_dilation_unitary(channel, m);
  return kron(Matrix::Identity(channel.dim(), channel.dim()), w) * u_can;
}

/// Applies a system-factor operator to a vector on system (x) ancilla.
Vector apply_to_system(const Matrix& op, const Vector& x, Index d, Index m) {
  Vector out = Vector::Zero(x.size());
  for (Index t = 0; t < d; ++t) {
    for (Index s = 0; s < d; ++s) {
      const Complex c = op(t, s);
      if (c == Complex(0.0, 0.0)) continue;
      out.segment(t * m, m) += c * x.segment(s * m, m);
    }
  }
  return out;
}

void check_shift(const std::optional<Matrix>& shift, Index d) {
  if (!shift) return;
  if (shift->rows() != d || shift->cols() != d) {
    throw DimensionMismatch("variable shift dimension mismatch");
  }
  if (!is_unitary(*shift)) {
    throw NotUnitary("variable shift is not unitary");
  }
}

}  // namespace

Matrix GluedDilation::global_unitary() const {
  const Index n = block_a.rows();
  Matrix u = Matrix::Zero(2 * n, 2 * n);
  u.topLeftCorner(n, n) = block_a;
  u.bottomRightCorner(n, n) = block_b;
  return u;
}

Matrix GluedDilation::effective_operator(const std::optional<Matrix>& shift) const {
  const Index d = system_dim;
  const Index m = total_ancilla_dim();
  check_shift(shift, d);
  // Columns of U_X (I (x) |E0>): the dilation image of each |s>|E0>.
  Matrix embed = Matrix::Zero(d * m, d);
  for (Index s = 0; s < d; ++s) {
    embed.block(s * m, s, m, 1) = ancilla_ref;
  }
  const Matrix ma = block_a * embed;
  Matrix mb = block_b * embed;
  if (shift) {
    Matrix shifted(mb.rows(), mb.cols());
    for (Index c = 0; c < mb.cols(); ++c) {
      shifted.col(c) = apply_to_system(*shift, mb.col(c), d, m);
    }
    mb = std::move(shifted);
  }
  return ma.adjoint() * mb;
}

InterferencePattern pattern_from_amplitude(Complex f) {
  InterferencePattern p;
  p.amplitude = f;
  p.visibility = std::abs(f);
  if (p.visibility < kZeroVisibility) {
    p.phase = 0.0;
  } else {
    p.phase = std::arg(f);
    if (p.phase <= -kPi) p.phase = kPi;  // arg returns [-pi, pi]; fold to (-pi, pi]
  }
  return p;
}

GluedDilation build_lsp_dilation(const LSPGluing& g) {
  const Index d = g.dim();
  const Index ma = g.channel_a.kraus_count() + 1;
  const Index mb = g.channel_b.kraus_count() + 1;
  const Matrix ua = lsp_side_unitary(g.channel_a, g.coeff_a, ma);
  const Matrix ub = lsp_side_unitary(g.channel_b, g.coeff_b, mb);

  GluedDilation out;
  out.kind = GluingKind::Lsp;
  out.system_dim = d;
  out.ancilla_dim_a = ma;
  out.ancilla_dim_b = mb;
  // Total ordering (system, E_A, E_B). Path A acts on (system, E_A):
  out.block_a = kron(ua, Matrix::Identity(mb, mb));
  // Path B acts on (system, E_B), identity on E_A.
  const Index n = d * ma * mb;
  Matrix block_b = Matrix::Zero(n, n);
  for (Index s = 0; s < d; ++s) {
    for (Index be = 0; be < mb; ++be) {
      for (Index t = 0; t < d; ++t) {
        for (Index be2 = 0; be2 < mb; ++be2) {
          const Complex c = ub(t * mb + be2, s * mb + be);
          if (c == Complex(0.0, 0.0)) continue;
          for (Index al = 0; al < ma; ++al) {
            block_b(t * ma * mb + al * mb + be2, s * ma * mb + al * mb + be) = c;
          }
        }
      }
    }
  }
  out.block_b = std::move(block_b);
  out.ancilla_ref = Vector::Zero(ma * mb);
  out.ancilla_ref(0) = 1.0;
  return out;
}

GluedDilation build_sp_dilation(const SPGluing& g) {
  const Index d = g.dim();
  const Index ra = g.channel_a.kraus_count();
  const Index rb = g.channel_b.kraus_count();
  const double top = singular_values(g.contraction)(0);
  if (top > 1.0 + tol::coeff_norm_slack) {
    throw ContractionInfeasible("build_sp_dilation: C C^dag <= I violated");
  }
  const Index m = ra + rb;
  // Shared-ancilla rotation with leading block C^T; the remaining columns of
  // the isometry [C^T; sqrt(I - conj(C) C^T)] are completed to a unitary.
  const Matrix x = g.contraction.transpose();
  const Matrix residual = psd_sqrt(Matrix::Identity(rb, rb) - x.adjoint() * x);
  Matrix cols(m, rb);
  cols.topRows(ra) = x;
  cols.bottomRows(rb) = residual;
  const Matrix w = complete_leading_columns(cols);

  GluedDilation out;
  out.kind = GluingKind::Sp;
  out.system_dim = d;
  out.ancilla_dim_a = m;
  out.ancilla_dim_b = m;
  out.block_a = canonical_dilation_unitary(g.channel_a, m);
  out.block_b = kron(Matrix::Identity(d, d), w) * canonical_dilation_unitary(g.channel_b, m);
  out.ancilla_ref = Vector::Zero(m);
  out.ancilla_ref(0) = 1.0;
  return out;
}

std::pair<double, double> detection_probabilities(const GluedDilation& d,
                                                  const PureState& psi,
                                                  const InterferometerConfig& cfg) {
  if (psi.dim() != d.system_dim) {
    throw DimensionMismatch("simulate: input state dimension mismatch");
  }
  check_shift(cfg.variable_shift, d.system_dim);
  const Index m = d.total_ancilla_dim();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  Vector x_a = kron(psi.amplitudes, d.ancilla_ref);
  Vector x_b = Vector::Zero(x_a.size());
  // First beamsplitter.
  Vector t = inv_sqrt2 * (x_a + x_b);
  x_b = inv_sqrt2 * (x_a - x_b);
  x_a = std::move(t);
  // Phase shifter in path A.
  x_a *= std::exp(Complex(0.0, cfg.phase));
  // Glued unitary (block diagonal in the path basis).
  x_a = d.block_a * x_a;
  x_b = d.block_b * x_b;
  // Optional variable shift on the internal state in path B.
  if (cfg.variable_shift) {
    x_b = apply_to_system(*cfg.variable_shift, x_b, d.system_dim, m);
  }
  // Second beamsplitter.
  t = inv_sqrt2 * (x_a + x_b);
  x_b = inv_sqrt2 * (x_a - x_b);
  x_a = std::move(t);
  return {x_a.squaredNorm(), x_b.squaredNorm()};
}

double simulate(const GluedDilation& d, const PureState& psi,
                const InterferometerConfig& cfg) {
  const auto [p_a, p_b] = detection_probabilities(d, psi, cfg);
  return std::clamp(p_a, 0.0, 1.0);
}

PhaseScanResult phase_scan(const GluedDilation& d, const PureState& psi,
                           const std::optional<Matrix>& shift) {
  InterferometerConfig cfg;
  cfg.variable_shift = shift;
  cfg.phase = 0.0;
  const double p0 = simulate(d, psi, cfg);
  cfg.phase = kPi / 2.0;
  const double p1 = simulate(d, psi, cfg);
  cfg.phase = kPi;
  const double p2 = simulate(d, psi, cfg);

  const Complex f(2.0 * p0 - 1.0, 2.0 * p1 - 1.0);
  if (std::abs((2.0 * p2 - 1.0) + f.real()) > kPatternConsistency) {
    throw InconsistentPattern(
        "phase_scan: pi sample contradicts the extracted amplitude "
        "(dilation is not subspace preserving)");
  }
  PhaseScanResult result;
  result.pattern = pattern_from_amplitude(f);
  result.samples = {{0.0, p0}, {kPi / 2.0, p1}, {kPi, p2}};
  return result;
}

PhaseScanResult phase_scan_density(const GluedDilation& d, const DensityMatrix& rho,
                                   const std::optional<Matrix>& shift) {
  const PureDecomposition decomp = spectral_decomposition(rho);
  Complex f = 0.0;
  std::vector<double> probs(3, 0.0);
  std::vector<double> phis;
  double total_weight = 0.0;
  for (const Vector& v : decomp.vectors) {
    const double weight = v.squaredNorm();
    total_weight += weight;
    const PureState psi{v / v.norm()};
    const PhaseScanResult part = phase_scan(d, psi, shift);
    f += weight * part.pattern.amplitude;
    phis.clear();
    for (std::size_t i = 0; i < part.samples.size(); ++i) {
      phis.push_back(part.samples[i].first);
      probs[i] += weight * part.samples[i].second;
    }
  }
  // Eigenvalues below the rank cutoff carry negligible weight; renormalize
  // the amplitude and the samples by the retained weight.
  PhaseScanResult result;
  result.pattern = pattern_from_amplitude(f / total_weight);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    result.samples.emplace_back(phis[i], probs[i] / total_weight);
  }
  return result;
}

InterferencePattern fit_pattern(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 3) {
    throw Error("fit_pattern: need at least three samples");
  }
  const Index n = static_cast<Index>(samples.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs(n);
  for (Index i = 0; i < n; ++i) {
    const auto& [phi, p] = samples[static_cast<std::size_t>(i)];
    design(i, 0) = 1.0;
    design(i, 1) = std::cos(phi);
    design(i, 2) = std::sin(phi);
    rhs(i) = p;
  }
  const Eigen::VectorXd c = design.colPivHouseholderQr().solve(rhs);
  return pattern_from_amplitude(Complex(2.0 * c(1), 2.0 * c(2)));
}

double numerical_radius(const Matrix& k, int samples, double tolerance,
                        std::uint64_t seed) {
  const Index d = k.rows();
  if (d != k.cols()) throw NotSquare("numerical_radius: matrix is not square");
  const double scale = std::max(1.0, max_abs(k));
  if (max_abs(k * k.adjoint() - k.adjoint() * k) <= 1e-12 * scale * scale) {
    // Normal operator: numerical radius equals the spectral radius.
    Eigen::ComplexEigenSolver<Matrix> solver(k);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
  }
  double best = 0.0;
  Vector best_psi;
  for (int i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    const Vector psi = rng.unit_vector(d);
    const double value = std::abs(Complex(psi.adjoint() * k * psi));
    if (value > best) {
      best = value;
      best_psi = psi;
    }
  }
  if (best_psi.size() == 0) return best;
  // Coordinate ascent alternating the phase theta = arg<psi|K|psi> with the
  // top eigenvector of (e^{-i theta} K + h.c.)/2; each step is monotone.
  Vector psi = best_psi;
  for (int iter = 0; iter < 500; ++iter) {
    const Complex f = Complex(psi.adjoint() * k * psi);
    const double theta = std::abs(f) > 0.0 ? std::arg(f) : 0.0;
    const Complex rot = std::exp(Complex(0.0, -theta));
    const Matrix h = (rot * k + std::conj(rot) * k.adjoint()) / 2.0;
    const Spectrum s = hermitian_eig(h);
    psi = s.vectors.col(0);
    const double value = std::abs(Complex(psi.adjoint() * k * psi));
    if (value <= best + tolerance * 1e-3) {
      best = std::max(best, value);
      break;
    }
    best = value;
  }
  return best;
}

double max_visibility_over_inputs(const GluedDilation& d,
                                  const std::optional<Matrix>& shift) {
  return numerical_radius(d.effective_operator(shift));
}

}  // namespace cohlab
