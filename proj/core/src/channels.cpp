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

#include "cohlab/channels.hpp"

#include <cmath>
#include <sstream>

namespace cohlab {

namespace {

std::string deviation_message(const char* what, double deviation) {
  std::ostringstream os;
  os << what << " (deviation " << deviation << ")";
  return os.str();
}

/// Row-major flattening |K>> with <<K'|K>> = tr[K'^dag K]; the Choi matrix is
/// sum_k |K_k>><<K_k| in this convention.
Vector flatten_row_major(const Matrix& k) {
  Vector v(k.rows() * k.cols());
  for (Index i = 0; i < k.rows(); ++i) {
    for (Index j = 0; j < k.cols(); ++j) {
      v(i * k.cols() + j) = k(i, j);
    }
  }
  return v;
}

}  // namespace

KrausChannel validate_channel(std::vector<Matrix> kraus) {
  if (kraus.empty()) {
    throw Error("channel needs at least one Kraus operator");
  }
  const Index d = kraus.front().rows();
  if (d < 1) {
    throw Error("channel dimension must be at least 1");
  }
  for (const Matrix& k : kraus) {
    if (k.rows() != k.cols()) {
      throw NotSquare("Kraus operators must be square");
    }
    if (k.rows() != d) {
      throw DimensionMismatch("Kraus operators must share one dimension");
    }
    require_finite(k, "Kraus operator");
  }
  Matrix acc = Matrix::Zero(d, d);
  for (const Matrix& k : kraus) {
    acc += k.adjoint() * k;
  }
  const double dev = max_abs(acc - Matrix::Identity(d, d));
  if (dev > tol::hermitian) {
    throw NotTracePreserving(
        deviation_message("channel completeness sum_k K^dag K != I", dev));
  }
  return KrausChannel{std::move(kraus)};
}

KrausChannel identity_channel(Index dim) {
  return KrausChannel{{Matrix::Identity(dim, dim)}};
}

KrausChannel unitary_channel(const Matrix& u) {
  if (!is_unitary(u)) {
    throw NotUnitary("unitary_channel: matrix is not unitary");
  }
  return KrausChannel{{u}};
}

DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) {
    throw DimensionMismatch("apply_channel: channel and state dimensions differ");
  }
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& k : channel.kraus) {
    out += k * rho.matrix * k.adjoint();
  }
  return validate_density(out);
}

Matrix choi_matrix(const KrausChannel& channel) {
  const Index d2 = channel.dim() * channel.dim();
  Matrix choi = Matrix::Zero(d2, d2);
  for (const Matrix& k : channel.kraus) {
    const Vector v = flatten_row_major(k);
    choi += v * v.adjoint();
  }
  return choi;
}

KrausChannel reduce_to_independent(const KrausChannel& channel) {
  const Index r = channel.kraus_count();
  Matrix gram(r, r);
  for (Index k = 0; k < r; ++k) {
    for (Index l = 0; l < r; ++l) {
      gram(k, l) = (channel.kraus[static_cast<std::size_t>(k)].adjoint() *
                    channel.kraus[static_cast<std::size_t>(l)])
                       .trace();
    }
  }
  const Spectrum s = hermitian_eig(gram);
  const double cutoff = tol::gram_relative * s.values(0);
  std::vector<Matrix> reduced;
  for (Index j = 0; j < r; ++j) {
    if (s.values(j) <= cutoff) continue;
    Matrix acc = Matrix::Zero(channel.dim(), channel.dim());
    for (Index k = 0; k < r; ++k) {
      acc += s.vectors(k, j) * channel.kraus[static_cast<std::size_t>(k)];
    }
    reduced.push_back(std::move(acc));
  }
  return validate_channel(std::move(reduced));
}

KrausChannel remix_kraus(const KrausChannel& channel, const Matrix& v) {
  const Index r = channel.kraus_count();
  if (v.cols() != r) {
    throw DimensionMismatch("remix_kraus: isometry column count mismatch");
  }
  const double dev = max_abs(v.adjoint() * v - Matrix::Identity(r, r));
  if (dev > tol::unitary) {
    throw NotIsometry(deviation_message("remix_kraus: V^dag V != I", dev));
  }
  std::vector<Matrix> remixed;
  for (Index j = 0; j < v.rows(); ++j) {
    Matrix acc = Matrix::Zero(channel.dim(), channel.dim());
    for (Index k = 0; k < r; ++k) {
      acc += v(j, k) * channel.kraus[static_cast<std::size_t>(k)];
    }
    remixed.push_back(std::move(acc));
  }
  return validate_channel(std::move(remixed));
}

StinespringDilation stinespring_dilation(const KrausChannel& channel) {
  const Index d = channel.dim();
  const Index r = channel.kraus_count();
  const Index m = std::max<Index>(r, 1);
  const Index n = d * m;
  // Columns at (s, ancilla=0) carry |phi_s>|E0> -> sum_k K_k|phi_s>|e_k>;
  // the rest are completed deterministically.
  Matrix partial = Matrix::Zero(n, n);
  std::vector<Index> given;
  for (Index s = 0; s < d; ++s) {
    Vector col = Vector::Zero(n);
    for (Index k = 0; k < r; ++k) {
      const Matrix& kraus = channel.kraus[static_cast<std::size_t>(k)];
      for (Index t = 0; t < d; ++t) {
        col(t * m + k) += kraus(t, s);
      }
    }
    partial.col(s * m) = col;
    given.push_back(s * m);
  }
  StinespringDilation out;
  out.system_dim = d;
  out.ancilla_dim = m;
  out.global_unitary = complete_unitary_columns(std::move(partial), given);
  out.ancilla_ref = Vector::Zero(m);
  out.ancilla_ref(0) = 1.0;
  return out;
}

DensityMatrix apply_dilation(const StinespringDilation& dil, const DensityMatrix& rho) {
  const Index d = dil.system_dim;
  const Index m = dil.ancilla_dim;
  if (rho.dim() != d) {
    throw DimensionMismatch("apply_dilation: state dimension mismatch");
  }
  const Matrix ref = dil.ancilla_ref * dil.ancilla_ref.adjoint();
  const Matrix full =
      dil.global_unitary * kron(rho.matrix, ref) * dil.global_unitary.adjoint();
  Matrix out = Matrix::Zero(d, d);
  for (Index s = 0; s < d; ++s) {
    for (Index t = 0; t < d; ++t) {
      Complex acc = 0.0;
      for (Index a = 0; a < m; ++a) {
        acc += full(s * m + a, t * m + a);
      }
      out(s, t) = acc;
    }
  }
  return validate_density(out);
}

KrausChannel preparation_channel(const PureState& psi, const DensityMatrix& rho_target) {
  const Index d = psi.dim();
  if (rho_target.dim() != d) {
    throw DimensionMismatch("preparation_channel: dimensions differ");
  }
  const PureDecomposition decomp = spectral_decomposition(rho_target);
  std::vector<Matrix> kraus;
  for (const Vector& a : decomp.vectors) {
    kraus.push_back(a * psi.amplitudes.adjoint());
  }
  // Orthonormal basis of psi's complement, by completing {psi} to a basis.
  Matrix partial = Matrix::Zero(d, d);
  partial.col(0) = psi.amplitudes;
  const Matrix basis = complete_unitary_columns(std::move(partial), {0});
  const Vector leading = decomp.vectors.front() / decomp.vectors.front().norm();
  for (Index j = 1; j < d; ++j) {
    kraus.push_back(leading * basis.col(j).adjoint());
  }
  return validate_channel(std::move(kraus));
}

KrausChannel random_channel(Index dim, Index kraus_count, std::uint64_t seed) {
  if (dim < 1 || kraus_count < 1) {
    throw Error("random_channel: dim and kraus_count must be at least 1");
  }
  // First dim columns of a Haar unitary on dim*kraus_count form an isometry
  // V: |s> -> sum_k (K_k|s>)|e_k>.
  const Matrix u = random_unitary(dim * kraus_count, seed);
  std::vector<Matrix> kraus;
  for (Index k = 0; k < kraus_count; ++k) {
    Matrix op(dim, dim);
    for (Index t = 0; t < dim; ++t) {
      for (Index s = 0; s < dim; ++s) {
        op(t, s) = u(t * kraus_count + k, s);
      }
    }
    kraus.push_back(std::move(op));
  }
  return validate_channel(std::move(kraus));
}

}  // namespace cohlab
