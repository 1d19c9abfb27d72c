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

#include "cohlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cohlab {

namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": state dimensions differ");
  }
}

/// sqrt with the spectral rank cutoff: true zeros computed as eps-level
/// noise must not turn into ~1e-8 contributions.
double sqrt_cut(double value) {
  return value > tol::rank_cutoff ? std::sqrt(value) : 0.0;
}

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  os.precision(6);
  os << "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v(i).real();
    if (v(i).imag() >= 0.0) os << "+";
    os << v(i).imag() << "i";
  }
  os << "]";
  return os.str();
}

/// Rotates a and b by a common phase so that a^dag Q b stays fixed while the
/// largest-magnitude entry of a becomes real nonnegative.
void canonicalize_pair(Vector& a, Vector& b) {
  Index best = 0;
  for (Index i = 1; i < a.size(); ++i) {
    if (std::abs(a(i)) > std::abs(a(best))) best = i;
  }
  if (std::abs(a(best)) == 0.0) return;
  const Complex phase = std::conj(a(best)) / std::abs(a(best));
  a *= phase;
  b *= phase;
}

}  // namespace

MeasureKind parse_measure_kind(const std::string& name) {
  if (name == "lsp") return MeasureKind::Lsp;
  if (name == "sp") return MeasureKind::Sp;
  if (name == "glsp") return MeasureKind::Glsp;
  if (name == "gsp") return MeasureKind::Gsp;
  throw ParseError("unknown measure kind: " + name);
}

std::string measure_kind_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Lsp: return "lsp";
    case MeasureKind::Sp: return "sp";
    case MeasureKind::Glsp: return "glsp";
    case MeasureKind::Gsp: return "gsp";
  }
  return "?";
}

std::string MeasureReport::summary() const {
  std::ostringstream os;
  os.precision(12);
  os << "value " << value;
  if (!optimizer_note.empty()) os << "; " << optimizer_note;
  if (coeff_a.size() > 0) {
    os << "; a = " << format_vector(coeff_a) << ", b = " << format_vector(coeff_b);
  }
  if (contraction.size() > 0) {
    os << "; contraction " << contraction.rows() << "x" << contraction.cols();
  }
  if (samples > 0) {
    os << "; certificate gap " << certificate_gap << " over " << samples << " samples";
  }
  return os.str();
}

double coherent_fidelity_lsp(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  require_same_dim(rho_a, rho_b, "coherent_fidelity_lsp");
  return fidelity_spectrum(rho_a, rho_b)(0);
}

double coherent_fidelity_sp(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  require_same_dim(rho_a, rho_b, "coherent_fidelity_sp");
  return uhlmann_fidelity(rho_a, rho_b);
}

double coherence_lsp(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  require_same_dim(rho_a, rho_b, "coherence_lsp");
  return sqrt_cut(hermitian_eig(rho_a.matrix).values(0)) *
         sqrt_cut(hermitian_eig(rho_b.matrix).values(0));
}

double coherence_sp(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  require_same_dim(rho_a, rho_b, "coherence_sp");
  const RealVector la = hermitian_eig(rho_a.matrix).values;
  const RealVector lb = hermitian_eig(rho_b.matrix).values;
  double acc = 0.0;
  for (Index k = 0; k < la.size(); ++k) {
    acc += sqrt_cut(la(k)) * sqrt_cut(lb(k));
  }
  return acc;
}

MeasureReport maximize_lsp_numeric(const KrausChannel& channel_a,
                                   const KrausChannel& channel_b,
                                   const PureState& psi, std::uint64_t seed,
                                   int samples) {
  const Matrix q = overlap_matrix_q(channel_a, channel_b, psi);
  Eigen::JacobiSVD<Matrix> svd(q, Eigen::ComputeThinU | Eigen::ComputeThinV);
  MeasureReport report;
  report.value = svd.singularValues()(0);
  report.coeff_a = svd.matrixU().col(0);
  report.coeff_b = svd.matrixV().col(0);
  canonicalize_pair(report.coeff_a, report.coeff_b);
  report.optimizer_note = "top singular vector pair of Q";
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    const Vector a = rng.unit_vector(q.rows());
    const Vector b = rng.unit_vector(q.cols());
    best = std::max(best, std::abs(Complex(a.adjoint() * q * b)));
  }
  report.samples = samples;
  report.certificate_gap = report.value - best;
  return report;
}

MeasureReport maximize_sp_numeric(const KrausChannel& channel_a,
                                  const KrausChannel& channel_b,
                                  const PureState& psi, std::uint64_t seed,
                                  int samples) {
  const Matrix q = overlap_matrix_q(channel_a, channel_b, psi);
  Eigen::JacobiSVD<Matrix> svd(q, Eigen::ComputeThinU | Eigen::ComputeThinV);
  MeasureReport report;
  report.value = svd.singularValues().sum();
  // C = V U^dag attains tr[CQ] = sum_k s_k and satisfies C C^dag <= I; on a
  // rank-deficient Q this is the support construction completed with zeros.
  report.contraction = svd.matrixV() * svd.matrixU().adjoint();
  report.optimizer_note = "contraction V U^dag from the SVD of Q";
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Matrix c =
        random_contraction(q.cols(), q.rows(), mix_seed(seed, static_cast<std::uint64_t>(i)));
    best = std::max(best, std::abs((c * q).trace()));
  }
  report.samples = samples;
  report.certificate_gap = report.value - best;
  return report;
}

Matrix optimal_aligner(const DensityMatrix& rho_a, const DensityMatrix& rho_b,
                       AlignerMode mode) {
  require_same_dim(rho_a, rho_b, "optimal_aligner");
  const Spectrum sa = hermitian_eig(rho_a.matrix);
  const Spectrum sb = hermitian_eig(rho_b.matrix);
  // Full alignment of the sorted eigenbases attains both measures; for the
  // Lsp mode only the leading pair matters but the full map is returned.
  (void)mode;
  return sb.vectors * sa.vectors.adjoint();
}

MeasureReport measure_with_certificate(const DensityMatrix& rho_a,
                                       const DensityMatrix& rho_b, MeasureKind kind,
                                       std::uint64_t seed, int samples) {
  const Index d = rho_a.dim();
  require_same_dim(rho_a, rho_b, "measure_with_certificate");
  if (kind == MeasureKind::Lsp || kind == MeasureKind::Sp) {
    Vector zero = Vector::Zero(d);
    zero(0) = 1.0;
    const PureState psi{zero};
    const KrausChannel prep_a = preparation_channel(psi, rho_a);
    const KrausChannel prep_b = preparation_channel(psi, rho_b);
    MeasureReport report =
        kind == MeasureKind::Lsp
            ? maximize_lsp_numeric(prep_a, prep_b, psi, seed, samples)
            : maximize_sp_numeric(prep_a, prep_b, psi, seed, samples);
    const double closed = kind == MeasureKind::Lsp
                              ? coherent_fidelity_lsp(rho_a, rho_b)
                              : coherent_fidelity_sp(rho_a, rho_b);
    report.optimizer_note += " (preparation channels from |0>)";
    report.certificate_gap += closed - report.value;
    report.value = closed;
    return report;
  }
  // Coherence measures: aligner attainment plus a random-unitary search.
  MeasureReport report;
  report.value = kind == MeasureKind::Glsp ? coherence_lsp(rho_a, rho_b)
                                           : coherence_sp(rho_a, rho_b);
  report.aligner = optimal_aligner(
      rho_a, rho_b, kind == MeasureKind::Glsp ? AlignerMode::Lsp : AlignerMode::Sp);
  report.optimizer_note = "eigenbasis alignment unitary";
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Matrix u = random_unitary_exp(d, mix_seed(seed, static_cast<std::uint64_t>(i)));
    const DensityMatrix rotated{u * rho_a.matrix * u.adjoint()};
    best = std::max(best, kind == MeasureKind::Glsp
                              ? coherent_fidelity_lsp(rotated, rho_b)
                              : coherent_fidelity_sp(rotated, rho_b));
  }
  report.samples = samples;
  report.certificate_gap = report.value - best;
  return report;
}

}  // namespace cohlab
