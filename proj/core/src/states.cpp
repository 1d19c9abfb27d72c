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

#include "cohlab/states.hpp"

#include <cmath>
#include <sstream>

namespace cohlab {

namespace {

std::string deviation_message(const char* what, double deviation) {
  std::ostringstream os;
  os << what << " (deviation " << deviation << ")";
  return os.str();
}

}  // namespace

DensityMatrix validate_density(const Matrix& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw NotSquare("density matrix is not square");
  }
  if (matrix.rows() < 1) {
    throw Error("density matrix must have dimension at least 1");
  }
  require_finite(matrix, "density matrix");
  const double herm_dev = max_abs(matrix - matrix.adjoint());
  if (herm_dev > tol::hermitian) {
    throw NotHermitian(deviation_message("density matrix is not Hermitian", herm_dev));
  }
  const double trace_dev = std::abs(matrix.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol::hermitian) {
    throw TraceNotOne(deviation_message("density matrix trace is not 1", trace_dev));
  }
  const Spectrum s = hermitian_eig(matrix);
  const double min_eig = s.values(s.values.size() - 1);
  if (min_eig < tol::psd_floor) {
    throw NotPSD(deviation_message("density matrix has a negative eigenvalue", min_eig));
  }
  return DensityMatrix{matrix};
}

PureState make_pure(const Vector& amplitudes) {
  if (amplitudes.size() < 1) {
    throw Error("pure state must have dimension at least 1");
  }
  require_finite(amplitudes, "pure state");
  const double dev = std::abs(amplitudes.norm() - 1.0);
  if (dev > tol::hermitian) {
    throw NotNormalized(deviation_message("pure state is not unit norm", dev));
  }
  return PureState{amplitudes};
}

DensityMatrix pure_to_density(const PureState& psi) {
  return DensityMatrix{psi.amplitudes * psi.amplitudes.adjoint()};
}

PureDecomposition spectral_decomposition(const DensityMatrix& rho) {
  const Spectrum s = hermitian_eig(rho.matrix);
  PureDecomposition d;
  for (Index k = 0; k < s.values.size(); ++k) {
    if (s.values(k) > tol::rank_cutoff) {
      d.vectors.push_back(std::sqrt(s.values(k)) * s.vectors.col(k));
    }
  }
  return d;
}

Matrix decomposition_state(const PureDecomposition& d) {
  if (d.vectors.empty()) {
    throw Error("decomposition_state: empty decomposition");
  }
  Matrix acc = Matrix::Zero(d.dim(), d.dim());
  for (const Vector& v : d.vectors) {
    acc += v * v.adjoint();
  }
  return acc;
}

PureDecomposition remix_decomposition(const PureDecomposition& d, const Matrix& v) {
  const Index r = d.size();
  if (v.cols() != r) {
    throw DimensionMismatch("remix_decomposition: isometry column count mismatch");
  }
  const double dev = max_abs(v.adjoint() * v - Matrix::Identity(r, r));
  if (dev > tol::unitary) {
    throw NotIsometry(deviation_message("remix_decomposition: V^dag V != I", dev));
  }
  PureDecomposition out;
  for (Index j = 0; j < v.rows(); ++j) {
    Vector acc = Vector::Zero(d.dim());
    for (Index k = 0; k < r; ++k) {
      acc += v(j, k) * d.vectors[static_cast<std::size_t>(k)];
    }
    out.vectors.push_back(std::move(acc));
  }
  return out;
}

Matrix overlap_matrix_m(const PureDecomposition& da, const PureDecomposition& db) {
  if (da.dim() != db.dim()) {
    throw DimensionMismatch("overlap_matrix_m: decompositions live in different dimensions");
  }
  Matrix m(da.size(), db.size());
  for (Index k = 0; k < da.size(); ++k) {
    for (Index l = 0; l < db.size(); ++l) {
      m(k, l) = da.vectors[static_cast<std::size_t>(k)].dot(
          db.vectors[static_cast<std::size_t>(l)]);
    }
  }
  return m;
}

RealVector fidelity_spectrum(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  if (rho_a.dim() != rho_b.dim()) {
    throw DimensionMismatch("fidelity_spectrum: dimensions differ");
  }
  const Matrix sqrt_b = psd_sqrt(rho_b.matrix);
  const Matrix sandwich = sqrt_b * rho_a.matrix * sqrt_b;
  RealVector values = hermitian_eig(sandwich).values;
  for (Index i = 0; i < values.size(); ++i) {
    values(i) = values(i) > tol::rank_cutoff ? std::sqrt(values(i)) : 0.0;
  }
  return values;
}

double uhlmann_fidelity(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  return fidelity_spectrum(rho_a, rho_b).sum();
}

DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed) {
  if (rank < 1 || rank > dim) {
    throw BadRank("random_density: rank must satisfy 1 <= rank <= dim");
  }
  Rng rng(seed);
  const Matrix g = rng.gaussian_matrix(dim, rank);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix{rho};
}

PureState random_pure(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return PureState{rng.unit_vector(dim)};
}

}  // namespace cohlab
