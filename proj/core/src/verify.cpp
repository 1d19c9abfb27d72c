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

#include "cohlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cohlab/interferometer.hpp"
#include "cohlab/measures.hpp"

namespace cohlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Suite {
  const char* name;
  double tolerance;
  // Returns the deviation observed in one trial.
  std::function<double(int dim, std::uint64_t seed)> trial;
};

Matrix random_isometry(Index rows, Index cols, std::uint64_t seed) {
  return random_unitary(rows, seed).leftCols(cols);
}

Matrix random_hermitian(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix g = rng.gaussian_matrix(dim, dim);
  return (g + g.adjoint()) / 2.0;
}

DensityMatrix random_density_any_rank(Index dim, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 9000));
  const Index rank = rng.uniform_int(1, dim);
  return random_density(dim, rank, mix_seed(seed, 9001));
}

/// Elementwise comparison of two non-increasing lists padded with zeros.
double padded_diff(const RealVector& a, const RealVector& b) {
  const Index n = std::max(a.size(), b.size());
  double dev = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double va = i < a.size() ? a(i) : 0.0;
    const double vb = i < b.size() ? b(i) : 0.0;
    dev = std::max(dev, std::abs(va - vb));
  }
  return dev;
}

struct Triple {
  DensityMatrix rho_a;
  DensityMatrix rho_b;
  PureState psi;
};

Triple random_triple(Index dim, std::uint64_t seed) {
  return Triple{random_density_any_rank(dim, mix_seed(seed, 1)),
                random_density_any_rank(dim, mix_seed(seed, 2)),
                random_pure(dim, mix_seed(seed, 3))};
}

// ---------------------------------------------------------------------------
// numerics

double trial_eig_reconstruction(int dim, std::uint64_t seed) {
  const Matrix h = random_hermitian(dim, seed);
  const Spectrum s = hermitian_eig(h);
  const Matrix rebuilt =
      s.vectors * s.values.cast<Complex>().asDiagonal() * s.vectors.adjoint();
  double ortho = 0.0;
  for (Index i = 0; i < s.vectors.cols(); ++i) {
    for (Index j = 0; j < s.vectors.cols(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      ortho = std::max(
          ortho, std::abs(std::abs(Complex(s.vectors.col(i).dot(s.vectors.col(j)))) -
                          expected));
    }
  }
  return std::max(max_abs_diff(rebuilt, h), ortho);
}

double trial_singular_value_invariance(int dim, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix m = rng.gaussian_matrix(dim, dim);
  const Matrix v = random_unitary(dim, mix_seed(seed, 1));
  const Matrix w = random_unitary(dim, mix_seed(seed, 2));
  return padded_diff(singular_values(m), singular_values(v * m * w));
}

double trial_psd_sqrt_consistency(int dim, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix g = rng.gaussian_matrix(dim, dim);
  Matrix p = g * g.adjoint();
  p /= p.trace().real();
  const Matrix s = psd_sqrt(p);
  const double root_dev = max_abs_diff(s * s, p);
  return std::max(root_dev, max_abs_diff(psd_sqrt(s * s), s));
}

double trial_polar_nuclear(int dim, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix m = rng.gaussian_matrix(dim, dim);
  const double nuclear = singular_values(m).sum();
  const Matrix w = polar_unitary(m);
  double dev = std::abs((w.adjoint() * m).trace().real() - nuclear);
  dev = std::max(dev, max_abs(w.adjoint() * w - Matrix::Identity(dim, dim)));
  for (int i = 0; i < 100; ++i) {
    const Matrix u = random_unitary(dim, mix_seed(seed, 100 + static_cast<std::uint64_t>(i)));
    dev = std::max(dev, std::abs((u.adjoint() * m).trace()) - nuclear);
  }
  return dev;
}

// ---------------------------------------------------------------------------
// states

double trial_decomposition_freedom(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const PureDecomposition da = spectral_decomposition(t.rho_a);
  const PureDecomposition db = spectral_decomposition(t.rho_b);
  const Matrix m = overlap_matrix_m(da, db);
  const Matrix v = random_isometry(da.size() + 1, da.size(), mix_seed(seed, 4));
  const Matrix w = random_isometry(db.size() + 2, db.size(), mix_seed(seed, 5));
  const Matrix m2 = overlap_matrix_m(remix_decomposition(da, v), remix_decomposition(db, w));
  return padded_diff(singular_values(m), singular_values(m2));
}

double trial_m_eigenvalue_identity(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const Matrix m = overlap_matrix_m(spectral_decomposition(t.rho_a),
                                    spectral_decomposition(t.rho_b));
  return padded_diff(singular_values(m), fidelity_spectrum(t.rho_a, t.rho_b));
}

double trial_uhlmann_singular_sum(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const Matrix m = overlap_matrix_m(spectral_decomposition(t.rho_a),
                                    spectral_decomposition(t.rho_b));
  return std::abs(uhlmann_fidelity(t.rho_a, t.rho_b) - singular_values(m).sum());
}

double trial_uhlmann_range_identity(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const double f = uhlmann_fidelity(t.rho_a, t.rho_b);
  const double self = uhlmann_fidelity(t.rho_a, t.rho_a);
  double dev = std::abs(self - 1.0);
  dev = std::max(dev, std::max(0.0, f - 1.0));
  dev = std::max(dev, std::max(0.0, -f));
  const double sym = std::abs(f - uhlmann_fidelity(t.rho_b, t.rho_a));
  dev = std::max(dev, sym);
  // fidelity 1 must imply equal states
  if (f > 1.0 - 1e-8) {
    dev = std::max(dev, max_abs_diff(t.rho_a.matrix, t.rho_b.matrix));
  }
  return dev;
}

// ---------------------------------------------------------------------------
// channels

double trial_preparation_completion(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const KrausChannel prep_a = preparation_channel(t.psi, t.rho_a);
  const KrausChannel prep_b = preparation_channel(t.psi, t.rho_b);
  const Matrix q = overlap_matrix_q(prep_a, prep_b, t.psi);
  const Index ra = spectral_decomposition(t.rho_a).size();
  const Index rb = spectral_decomposition(t.rho_b).size();
  // Preparation channels list the decomposition operators first; the
  // completion rows/columns of Q must vanish.
  const Matrix q_core = q.topLeftCorner(ra, rb);
  double dev = padded_diff(singular_values(q), singular_values(q_core));
  dev = std::max(dev, max_abs_diff(apply_channel(prep_a, pure_to_density(t.psi)).matrix,
                                   t.rho_a.matrix));
  return dev;
}

double trial_kraus_pure_decomposition(int dim, std::uint64_t seed) {
  Rng rng(seed);
  const Index r = rng.uniform_int(1, dim * dim);
  const KrausChannel channel = random_channel(dim, r, mix_seed(seed, 1));
  const PureState psi = random_pure(dim, mix_seed(seed, 2));
  Matrix rebuilt = Matrix::Zero(dim, dim);
  for (const Matrix& k : channel.kraus) {
    const Vector v = k * psi.amplitudes;
    rebuilt += v * v.adjoint();
  }
  return max_abs_diff(rebuilt, apply_channel(channel, pure_to_density(psi)).matrix);
}

double trial_dilation_round_trip(int dim, std::uint64_t seed) {
  Rng rng(seed);
  const Index r = rng.uniform_int(1, dim * dim);
  const KrausChannel channel = random_channel(dim, r, mix_seed(seed, 1));
  const StinespringDilation dil = stinespring_dilation(channel);
  double dev = max_abs(dil.global_unitary.adjoint() * dil.global_unitary -
                       Matrix::Identity(dil.global_unitary.rows(), dil.global_unitary.rows()));
  for (int i = 0; i < 3; ++i) {
    const DensityMatrix rho =
        random_density_any_rank(dim, mix_seed(seed, 10 + static_cast<std::uint64_t>(i)));
    dev = std::max(dev, max_abs_diff(apply_dilation(dil, rho).matrix,
                                     apply_channel(channel, rho).matrix));
  }
  return dev;
}

double trial_choi_preservation(int dim, std::uint64_t seed) {
  Rng rng(seed);
  const Index r = rng.uniform_int(1, dim * dim);
  const KrausChannel channel = random_channel(dim, r, mix_seed(seed, 1));
  const Matrix choi = choi_matrix(channel);
  const Matrix v = random_isometry(r + 1, r, mix_seed(seed, 2));
  double dev = max_abs_diff(choi, choi_matrix(remix_kraus(channel, v)));
  dev = std::max(dev, max_abs_diff(choi, choi_matrix(reduce_to_independent(channel))));
  return dev;
}

// ---------------------------------------------------------------------------
// gluings

double trial_interference_bound(int dim, std::uint64_t seed) {
  const LSPGluing lsp = random_lsp_gluing(dim, mix_seed(seed, 1));
  const SPGluing sp = random_sp_gluing(dim, mix_seed(seed, 2));
  const DensityMatrix rho = random_density_any_rank(dim, mix_seed(seed, 3));
  double dev = std::max(0.0, std::abs(interference_lsp(lsp, rho)) - 1.0);
  dev = std::max(dev, std::abs(interference_sp(sp, rho)) - 1.0);
  return std::max(dev, 0.0);
}

double trial_coherence_operator_consistency(int dim, std::uint64_t seed) {
  const LSPGluing g = random_lsp_gluing(dim, mix_seed(seed, 1));
  const DensityMatrix rho = random_density_any_rank(dim, mix_seed(seed, 2));
  const CoherenceOperatorPair ops = coherence_operators(g);
  const Complex via_ops = (ops.op_a.adjoint() * ops.op_b * rho.matrix).trace();
  return std::abs(interference_lsp(g, rho) - via_ops);
}

double trial_sp_embeds_lsp(int dim, std::uint64_t seed) {
  const LSPGluing g = random_lsp_gluing(dim, mix_seed(seed, 1));
  const SPGluing sp = lsp_to_sp(g);
  const DensityMatrix rho = random_density_any_rank(dim, mix_seed(seed, 2));
  return std::abs(interference_lsp(g, rho) - interference_sp(sp, rho));
}

double trial_q_matrix_invariance(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const KrausChannel prep_a = preparation_channel(t.psi, t.rho_a);
  const KrausChannel prep_b = preparation_channel(t.psi, t.rho_b);
  const RealVector sv = singular_values(overlap_matrix_q(prep_a, prep_b, t.psi));

  const Matrix va = random_isometry(prep_a.kraus_count() + 1, prep_a.kraus_count(),
                                    mix_seed(seed, 4));
  const Matrix vb = random_isometry(prep_b.kraus_count() + 1, prep_b.kraus_count(),
                                    mix_seed(seed, 5));
  const RealVector sv_remixed = singular_values(
      overlap_matrix_q(remix_kraus(prep_a, va), remix_kraus(prep_b, vb), t.psi));

  const PureState alt = random_pure(dim, mix_seed(seed, 6));
  const RealVector sv_alt = singular_values(overlap_matrix_q(
      preparation_channel(alt, t.rho_a), preparation_channel(alt, t.rho_b), alt));

  return std::max(padded_diff(sv, sv_remixed), padded_diff(sv, sv_alt));
}

double trial_interference_linearity(int dim, std::uint64_t seed) {
  const LSPGluing g = random_lsp_gluing(dim, mix_seed(seed, 1));
  const DensityMatrix rho1 = random_density_any_rank(dim, mix_seed(seed, 2));
  const DensityMatrix rho2 = random_density_any_rank(dim, mix_seed(seed, 3));
  Rng rng(mix_seed(seed, 4));
  const double alpha = rng.uniform();
  const DensityMatrix mixed{alpha * rho1.matrix + (1.0 - alpha) * rho2.matrix};
  const Complex lhs = interference_lsp(g, mixed);
  const Complex rhs =
      alpha * interference_lsp(g, rho1) + (1.0 - alpha) * interference_lsp(g, rho2);
  return std::abs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// measures

double trial_ordering_chain(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const double f_lsp = coherent_fidelity_lsp(t.rho_a, t.rho_b);
  const double f_sp = coherent_fidelity_sp(t.rho_a, t.rho_b);
  const double g_lsp = coherence_lsp(t.rho_a, t.rho_b);
  const double g_sp = coherence_sp(t.rho_a, t.rho_b);
  double dev = 0.0;
  dev = std::max(dev, f_lsp - f_sp);
  dev = std::max(dev, f_sp - g_sp);
  dev = std::max(dev, f_lsp - g_lsp);
  dev = std::max(dev, g_lsp - g_sp);
  for (double v : {f_lsp, f_sp, g_lsp, g_sp}) {
    dev = std::max(dev, v - 1.0);
    dev = std::max(dev, -v);
  }
  return std::max(dev, 0.0);
}

double trial_channel_independence(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const double closed_lsp = coherent_fidelity_lsp(t.rho_a, t.rho_b);
  const double closed_sp = coherent_fidelity_sp(t.rho_a, t.rho_b);

  const KrausChannel prep_a = preparation_channel(t.psi, t.rho_a);
  const KrausChannel prep_b = preparation_channel(t.psi, t.rho_b);
  const Matrix va = random_isometry(prep_a.kraus_count() + 1, prep_a.kraus_count(),
                                    mix_seed(seed, 4));
  const Matrix vb = random_isometry(prep_b.kraus_count() + 1, prep_b.kraus_count(),
                                    mix_seed(seed, 5));
  const PureState alt = random_pure(dim, mix_seed(seed, 6));
  const KrausChannel alt_a = preparation_channel(alt, t.rho_a);
  const KrausChannel alt_b = preparation_channel(alt, t.rho_b);

  double dev = 0.0;
  const auto check = [&](const KrausChannel& a, const KrausChannel& b, const PureState& psi) {
    dev = std::max(dev,
                   std::abs(maximize_lsp_numeric(a, b, psi, 0, 0).value - closed_lsp));
    dev = std::max(dev,
                   std::abs(maximize_sp_numeric(a, b, psi, 0, 0).value - closed_sp));
  };
  check(prep_a, prep_b, t.psi);
  check(remix_kraus(prep_a, va), remix_kraus(prep_b, vb), t.psi);
  check(alt_a, alt_b, alt);
  return dev;
}

double trial_input_state_irrelevance(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const PureState alt = random_pure(dim, mix_seed(seed, 6));
  const double v1 = maximize_lsp_numeric(preparation_channel(t.psi, t.rho_a),
                                         preparation_channel(t.psi, t.rho_b), t.psi, 0, 0)
                        .value;
  const double v2 = maximize_lsp_numeric(preparation_channel(alt, t.rho_a),
                                         preparation_channel(alt, t.rho_b), alt, 0, 0)
                        .value;
  return std::abs(v1 - v2);
}

double trial_coherence_unitary_invariance(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const Matrix v = random_unitary(dim, mix_seed(seed, 4));
  const Matrix w = random_unitary(dim, mix_seed(seed, 5));
  const DensityMatrix ra{v * t.rho_a.matrix * v.adjoint()};
  const DensityMatrix rb{w * t.rho_b.matrix * w.adjoint()};
  const double dev_lsp = std::abs(coherence_lsp(ra, rb) - coherence_lsp(t.rho_a, t.rho_b));
  const double dev_sp = std::abs(coherence_sp(ra, rb) - coherence_sp(t.rho_a, t.rho_b));
  return std::max(dev_lsp, dev_sp);
}

double trial_measure_never_exceeds(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const double f_lsp = coherent_fidelity_lsp(t.rho_a, t.rho_b);
  const double f_sp = coherent_fidelity_sp(t.rho_a, t.rho_b);
  const double g_lsp = coherence_lsp(t.rho_a, t.rho_b);
  const double g_sp = coherence_sp(t.rho_a, t.rho_b);
  const KrausChannel prep_a = preparation_channel(t.psi, t.rho_a);
  const KrausChannel prep_b = preparation_channel(t.psi, t.rho_b);
  const Matrix q = overlap_matrix_q(prep_a, prep_b, t.psi);
  double dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t s = mix_seed(seed, 100 + static_cast<std::uint64_t>(i));
    Rng rng(s);
    const Vector a = rng.unit_vector(q.rows());
    const Vector b = rng.unit_vector(q.cols());
    dev = std::max(dev, std::abs(Complex(a.adjoint() * q * b)) - f_lsp);
    const Matrix c = random_contraction(q.cols(), q.rows(), mix_seed(s, 1));
    dev = std::max(dev, std::abs((c * q).trace()) - f_sp);
    const Matrix u = random_unitary_exp(dim, mix_seed(s, 2));
    const DensityMatrix rotated{u * t.rho_a.matrix * u.adjoint()};
    dev = std::max(dev, coherent_fidelity_lsp(rotated, t.rho_b) - g_lsp);
    dev = std::max(dev, coherent_fidelity_sp(rotated, t.rho_b) - g_sp);
  }
  return std::max(dev, 0.0);
}

double trial_aligner_attainment(int dim, std::uint64_t seed) {
  const Triple t = random_triple(dim, seed);
  const Matrix u_lsp = optimal_aligner(t.rho_a, t.rho_b, AlignerMode::Lsp);
  const Matrix u_sp = optimal_aligner(t.rho_a, t.rho_b, AlignerMode::Sp);
  const DensityMatrix rot_lsp{u_lsp * t.rho_a.matrix * u_lsp.adjoint()};
  const DensityMatrix rot_sp{u_sp * t.rho_a.matrix * u_sp.adjoint()};
  const double dev_lsp =
      std::abs(coherent_fidelity_lsp(rot_lsp, t.rho_b) - coherence_lsp(t.rho_a, t.rho_b));
  const double dev_sp =
      std::abs(coherent_fidelity_sp(rot_sp, t.rho_b) - coherence_sp(t.rho_a, t.rho_b));
  return std::max(dev_lsp, dev_sp);
}

// ---------------------------------------------------------------------------
// interferometer

double trial_oracle_equivalence(int dim, std::uint64_t seed) {
  const PureState psi = random_pure(dim, mix_seed(seed, 1));
  const DensityMatrix rho = pure_to_density(psi);

  const LSPGluing lsp = random_lsp_gluing(dim, mix_seed(seed, 2));
  const GluedDilation dil_lsp = build_lsp_dilation(lsp);
  double dev = std::abs(phase_scan(dil_lsp, psi).pattern.amplitude -
                        interference_lsp(lsp, rho));

  const SPGluing sp = random_sp_gluing(dim, mix_seed(seed, 3));
  const GluedDilation dil_sp = build_sp_dilation(sp);
  dev = std::max(dev, std::abs(phase_scan(dil_sp, psi).pattern.amplitude -
                               interference_sp(sp, rho)));

  const Matrix u = random_unitary(dim, mix_seed(seed, 4));
  dev = std::max(dev, std::abs(phase_scan(dil_sp, psi, u).pattern.amplitude -
                               generalized_interference(sp, rho, u)));
  return dev;
}

double trial_dilation_unitarity(int dim, std::uint64_t seed) {
  const LSPGluing lsp = random_lsp_gluing(dim, mix_seed(seed, 1));
  const SPGluing sp = random_sp_gluing(dim, mix_seed(seed, 2));
  double dev = 0.0;
  for (const GluedDilation& d : {build_lsp_dilation(lsp), build_sp_dilation(sp)}) {
    const Index n = d.block_a.rows();
    dev = std::max(dev, max_abs(d.block_a.adjoint() * d.block_a - Matrix::Identity(n, n)));
    dev = std::max(dev, max_abs(d.block_b.adjoint() * d.block_b - Matrix::Identity(n, n)));
  }
  return dev;
}

double trial_subspace_preservation(int dim, std::uint64_t seed) {
  const LSPGluing lsp = random_lsp_gluing(dim, mix_seed(seed, 1));
  const GluedDilation d = build_lsp_dilation(lsp);
  const PureState psi = random_pure(dim, mix_seed(seed, 2));
  Rng rng(mix_seed(seed, 3));
  InterferometerConfig cfg;
  cfg.phase = rng.uniform() * 2.0 * kPi;
  const auto [pa, pb] = detection_probabilities(d, psi, cfg);
  double dev = std::abs(pa + pb - 1.0);
  const Matrix global = d.global_unitary();
  const Index n = d.block_a.rows();
  dev = std::max(dev, max_abs(global.topRightCorner(n, n)));
  dev = std::max(dev, max_abs(global.bottomLeftCorner(n, n)));
  return dev;
}

double trial_shift_reduction(int dim, std::uint64_t seed) {
  const LSPGluing g = random_lsp_gluing(dim, mix_seed(seed, 1));
  const PureState psi = random_pure(dim, mix_seed(seed, 2));
  const Matrix u = random_unitary(dim, mix_seed(seed, 3));
  const Complex with_shift =
      phase_scan(build_lsp_dilation(g), psi, u).pattern.amplitude;
  std::vector<Matrix> post;
  for (const Matrix& k : g.channel_b.kraus) post.push_back(u * k);
  const LSPGluing composed = make_lsp_gluing(
      g.channel_a, validate_channel(std::move(post)), g.coeff_a, g.coeff_b);
  const Complex reduced =
      phase_scan(build_lsp_dilation(composed), psi).pattern.amplitude;
  return std::abs(with_shift - reduced);
}

double trial_interferometer_anchor(int dim, std::uint64_t seed) {
  const LSPGluing id = make_lsp_gluing(identity_channel(dim), identity_channel(dim),
                                       Vector::Ones(1), Vector::Ones(1));
  const GluedDilation d = build_lsp_dilation(id);
  Vector zero = Vector::Zero(dim);
  zero(0) = 1.0;
  const PureState psi{zero};
  Rng rng(seed);
  InterferometerConfig cfg;
  cfg.phase = rng.uniform() * 2.0 * kPi;
  const double expected = (1.0 + std::cos(cfg.phase)) / 2.0;
  return std::abs(simulate(d, psi, cfg) - expected);
}

double trial_unitary_path_pattern(int dim, std::uint64_t seed) {
  const PureState psi = random_pure(dim, mix_seed(seed, 1));
  const Matrix u = random_unitary(dim, mix_seed(seed, 2));
  const LSPGluing g = make_lsp_gluing(identity_channel(dim), unitary_channel(u),
                                      Vector::Ones(1), Vector::Ones(1));
  const Complex f = phase_scan(build_lsp_dilation(g), psi).pattern.amplitude;
  const Complex expected = psi.amplitudes.dot(u * psi.amplitudes);
  return std::abs(f - expected);
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"eig-reconstruction", 1e-9, trial_eig_reconstruction},
      {"singular-value-invariance", 1e-9, trial_singular_value_invariance},
      {"psd-sqrt-consistency", 1e-8, trial_psd_sqrt_consistency},
      {"polar-nuclear-norm", 1e-8, trial_polar_nuclear},
      {"decomposition-freedom", 1e-9, trial_decomposition_freedom},
      {"m-matrix-eigenvalue-identity", 1e-9, trial_m_eigenvalue_identity},
      {"uhlmann-singular-sum", 1e-9, trial_uhlmann_singular_sum},
      {"uhlmann-range-identity", 1e-8, trial_uhlmann_range_identity},
      {"preparation-completion-invariance", 1e-10, trial_preparation_completion},
      {"kraus-pure-decomposition", 1e-9, trial_kraus_pure_decomposition},
      {"dilation-round-trip", 1e-9, trial_dilation_round_trip},
      {"choi-preservation", 1e-9, trial_choi_preservation},
      {"interference-bound", 1e-9, trial_interference_bound},
      {"coherence-operator-consistency", 1e-10, trial_coherence_operator_consistency},
      {"sp-embeds-lsp", 1e-12, trial_sp_embeds_lsp},
      {"q-matrix-invariance", 1e-9, trial_q_matrix_invariance},
      {"interference-linearity", 1e-12, trial_interference_linearity},
      {"ordering-chain", 1e-9, trial_ordering_chain},
      {"channel-independence", 1e-9, trial_channel_independence},
      {"input-state-irrelevance", 1e-9, trial_input_state_irrelevance},
      {"coherence-unitary-invariance", 1e-9, trial_coherence_unitary_invariance},
      {"measure-never-exceeds", 1e-8, trial_measure_never_exceeds},
      {"aligner-attainment", 1e-9, trial_aligner_attainment},
      {"oracle-equivalence", 1e-10, trial_oracle_equivalence},
      {"dilation-unitarity", 1e-9, trial_dilation_unitarity},
      {"subspace-preservation", 1e-12, trial_subspace_preservation},
      {"shift-reduction", 1e-10, trial_shift_reduction},
      {"interferometer-anchor", 1e-12, trial_interferometer_anchor},
      {"unitary-path-pattern", 1e-10, trial_unitary_path_pattern},
  };
  return all;
}

}  // namespace

std::vector<SuiteResult> run_verification(int dim, int trials, std::uint64_t seed) {
  std::vector<SuiteResult> results;
  std::uint64_t suite_index = 0;
  for (const Suite& suite : suites()) {
    const std::uint64_t suite_seed = mix_seed(seed, 0x5115 + suite_index++);
    SuiteResult result;
    result.name = suite.name;
    result.tolerance = suite.tolerance;
    for (int t = 0; t < trials; ++t) {
      const double dev = suite.trial(dim, mix_seed(suite_seed, static_cast<std::uint64_t>(t)));
      result.max_deviation = std::max(result.max_deviation, dev);
    }
    result.passed = result.max_deviation <= suite.tolerance;
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace cohlab
