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

#include "cohlab/gluings.hpp"

#include <cmath>
#include <sstream>

namespace cohlab {

namespace {

std::string deviation_message(const char* what, double deviation) {
  std::ostringstream os;
  os << what << " (deviation " << deviation << ")";
  return os.str();
}

void require_same_dim(const KrausChannel& a, const KrausChannel& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": channel dimensions differ");
  }
}

void require_state_dim(Index channel_dim, Index state_dim, const char* what) {
  if (channel_dim != state_dim) {
    throw DimensionMismatch(std::string(what) + ": state dimension mismatch");
  }
}

}  // namespace

LSPGluing make_lsp_gluing(KrausChannel channel_a, KrausChannel channel_b,
                          Vector coeff_a, Vector coeff_b) {
  require_same_dim(channel_a, channel_b, "make_lsp_gluing");
  if (coeff_a.size() != channel_a.kraus_count() ||
      coeff_b.size() != channel_b.kraus_count()) {
    throw DimensionMismatch("make_lsp_gluing: coefficient length != Kraus count");
  }
  for (const Vector* c : {&coeff_a, &coeff_b}) {
    const double norm = c->norm();
    if (norm > 1.0 + tol::coeff_norm_slack) {
      throw CoefficientNormExceeded(
          deviation_message("make_lsp_gluing: coefficient norm exceeds 1", norm - 1.0));
    }
  }
  return LSPGluing{std::move(channel_a), std::move(channel_b), std::move(coeff_a),
                   std::move(coeff_b)};
}

SPGluing make_sp_gluing(KrausChannel channel_a, KrausChannel channel_b,
                        Matrix contraction) {
  require_same_dim(channel_a, channel_b, "make_sp_gluing");
  if (contraction.rows() != channel_b.kraus_count() ||
      contraction.cols() != channel_a.kraus_count()) {
    throw DimensionMismatch(
        "make_sp_gluing: contraction must be (kraus count of B) x (kraus count of A)");
  }
  const double top = singular_values(contraction)(0);
  if (top > 1.0 + tol::coeff_norm_slack) {
    throw ContractionInfeasible(
        deviation_message("make_sp_gluing: C C^dag <= I violated", top - 1.0));
  }
  return SPGluing{std::move(channel_a), std::move(channel_b), std::move(contraction)};
}

SPGluing lsp_to_sp(const LSPGluing& g) {
  Matrix c = g.coeff_b * g.coeff_a.adjoint();
  return make_sp_gluing(g.channel_a, g.channel_b, std::move(c));
}

Complex interference_lsp(const LSPGluing& g, const DensityMatrix& rho) {
  require_state_dim(g.dim(), rho.dim(), "interference_lsp");
  Complex f = 0.0;
  for (Index k = 0; k < g.channel_a.kraus_count(); ++k) {
    const Matrix& ak = g.channel_a.kraus[static_cast<std::size_t>(k)];
    for (Index l = 0; l < g.channel_b.kraus_count(); ++l) {
      const Matrix& bl = g.channel_b.kraus[static_cast<std::size_t>(l)];
      f += g.coeff_b(l) * std::conj(g.coeff_a(k)) * (ak.adjoint() * bl * rho.matrix).trace();
    }
  }
  return f;
}

Complex interference_sp(const SPGluing& g, const DensityMatrix& rho) {
  require_state_dim(g.dim(), rho.dim(), "interference_sp");
  Complex f = 0.0;
  for (Index k = 0; k < g.channel_a.kraus_count(); ++k) {
    const Matrix& ak = g.channel_a.kraus[static_cast<std::size_t>(k)];
    for (Index l = 0; l < g.channel_b.kraus_count(); ++l) {
      const Matrix& bl = g.channel_b.kraus[static_cast<std::size_t>(l)];
      f += g.contraction(l, k) * (ak.adjoint() * bl * rho.matrix).trace();
    }
  }
  return f;
}

Complex generalized_interference(const SPGluing& g, const DensityMatrix& rho,
                                 const Matrix& u) {
  require_state_dim(g.dim(), rho.dim(), "generalized_interference");
  if (u.rows() != g.dim() || u.cols() != g.dim()) {
    throw DimensionMismatch("generalized_interference: shift dimension mismatch");
  }
  if (!is_unitary(u)) {
    throw NotUnitary("generalized_interference: shift is not unitary");
  }
  Complex f = 0.0;
  for (Index k = 0; k < g.channel_a.kraus_count(); ++k) {
    const Matrix& ak = g.channel_a.kraus[static_cast<std::size_t>(k)];
    for (Index l = 0; l < g.channel_b.kraus_count(); ++l) {
      const Matrix& bl = g.channel_b.kraus[static_cast<std::size_t>(l)];
      f += g.contraction(l, k) * (ak.adjoint() * u * bl * rho.matrix).trace();
    }
  }
  return f;
}

CoherenceOperatorPair coherence_operators(const LSPGluing& g) {
  const Index d = g.dim();
  Matrix op_a = Matrix::Zero(d, d);
  for (Index k = 0; k < g.channel_a.kraus_count(); ++k) {
    op_a += g.coeff_a(k) * g.channel_a.kraus[static_cast<std::size_t>(k)];
  }
  Matrix op_b = Matrix::Zero(d, d);
  for (Index l = 0; l < g.channel_b.kraus_count(); ++l) {
    op_b += g.coeff_b(l) * g.channel_b.kraus[static_cast<std::size_t>(l)];
  }
  return CoherenceOperatorPair{std::move(op_a), std::move(op_b)};
}

Matrix overlap_matrix_q(const KrausChannel& channel_a, const KrausChannel& channel_b,
                        const PureState& psi, const std::optional<Matrix>& shift) {
  require_same_dim(channel_a, channel_b, "overlap_matrix_q");
  require_state_dim(channel_a.dim(), psi.dim(), "overlap_matrix_q");
  if (shift) {
    if (shift->rows() != psi.dim() || shift->cols() != psi.dim()) {
      throw DimensionMismatch("overlap_matrix_q: shift dimension mismatch");
    }
    if (!is_unitary(*shift)) {
      throw NotUnitary("overlap_matrix_q: shift is not unitary");
    }
  }
  const Index ra = channel_a.kraus_count();
  const Index rb = channel_b.kraus_count();
  Matrix q(ra, rb);
  std::vector<Vector> a_psi(static_cast<std::size_t>(ra));
  for (Index k = 0; k < ra; ++k) {
    a_psi[static_cast<std::size_t>(k)] =
        channel_a.kraus[static_cast<std::size_t>(k)] * psi.amplitudes;
  }
  for (Index l = 0; l < rb; ++l) {
    Vector b_psi = channel_b.kraus[static_cast<std::size_t>(l)] * psi.amplitudes;
    if (shift) b_psi = (*shift) * b_psi;
    for (Index k = 0; k < ra; ++k) {
      q(k, l) = a_psi[static_cast<std::size_t>(k)].dot(b_psi);
    }
  }
  return q;
}

Matrix random_contraction(Index rows, Index cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix c = rng.gaussian_matrix(rows, cols);
  const double top = singular_values(c)(0);
  if (top > 0.0) c /= top;
  return c;
}

LSPGluing random_lsp_gluing(Index dim, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0));
  const Index ra = rng.uniform_int(1, dim * dim);
  const Index rb = rng.uniform_int(1, dim * dim);
  KrausChannel a = random_channel(dim, ra, mix_seed(seed, 1));
  KrausChannel b = random_channel(dim, rb, mix_seed(seed, 2));
  Vector ca = rng.gaussian_vector(ra);
  ca *= std::sqrt(rng.uniform()) / ca.norm();
  Vector cb = rng.gaussian_vector(rb);
  cb *= std::sqrt(rng.uniform()) / cb.norm();
  return make_lsp_gluing(std::move(a), std::move(b), std::move(ca), std::move(cb));
}

SPGluing random_sp_gluing(Index dim, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0));
  const Index ra = rng.uniform_int(1, dim * dim);
  const Index rb = rng.uniform_int(1, dim * dim);
  KrausChannel a = random_channel(dim, ra, mix_seed(seed, 1));
  KrausChannel b = random_channel(dim, rb, mix_seed(seed, 2));
  Matrix c = random_contraction(rb, ra, mix_seed(seed, 3));
  return make_sp_gluing(std::move(a), std::move(b), std::move(c));
}

}  // namespace cohlab
