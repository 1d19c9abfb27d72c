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

#include "cohlab/numerics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cohlab {

namespace {

// Orthogonalization residuals below this are treated as spanned when picking
// completion candidates. A re-orthogonalization pass restores machine-level
// accuracy for accepted candidates.
constexpr double kCompletionResidual = 1e-6;

std::string deviation_message(const char* what, double deviation) {
  std::ostringstream os;
  os << what << " (deviation " << deviation << ")";
  return os.str();
}

}  // namespace

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("max_abs_diff: shapes differ");
  }
  return max_abs(a - b);
}

bool is_hermitian(const Matrix& m, double tolerance) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tolerance;
}

bool is_unitary(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())) <= tolerance;
}

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw NotFinite(std::string(what) + ": non-finite entries");
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

Spectrum hermitian_eig(const Matrix& h) {
  if (h.rows() != h.cols()) {
    throw NotSquare("hermitian_eig: matrix is not square");
  }
  require_finite(h, "hermitian_eig");
  const double dev = max_abs(h - h.adjoint());
  if (dev > tol::hermitian) {
    throw NotHermitian(deviation_message("hermitian_eig: matrix is not Hermitian", dev));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver((h + h.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver failed to converge");
  }
  // Eigen sorts ascending; flip to non-increasing.
  Spectrum s;
  s.values = solver.eigenvalues().reverse();
  s.vectors = solver.eigenvectors().rowwise().reverse();
  return s;
}

RealVector singular_values(const Matrix& m) {
  require_finite(m, "singular_values");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

Matrix psd_sqrt(const Matrix& p) {
  Spectrum s = hermitian_eig(p);
  RealVector clamped = s.values;
  for (Index i = 0; i < clamped.size(); ++i) {
    if (clamped(i) < tol::psd_floor) {
      throw NotPSD(deviation_message("psd_sqrt: negative eigenvalue", clamped(i)));
    }
    if (clamped(i) < 0.0) clamped(i) = 0.0;
  }
  return s.vectors * clamped.cwiseSqrt().asDiagonal() * s.vectors.adjoint();
}

Matrix polar_unitary(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw NotSquare("polar_unitary: matrix is not square");
  }
  require_finite(m, "polar_unitary");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= tol::min_singular) {
    throw RankDeficient(deviation_message(
        "polar_unitary: smallest singular value at or below the rank floor",
        sv.size() == 0 ? 0.0 : sv(sv.size() - 1)));
  }
  return svd.matrixU() * svd.matrixV().adjoint();
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Matrix Rng::gaussian_matrix(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = complex_normal();
    }
  }
  return m;
}

Vector Rng::gaussian_vector(Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = complex_normal();
  return v;
}

Vector Rng::unit_vector(Index n) {
  Vector v = gaussian_vector(n);
  return v / v.norm();
}

Matrix random_unitary(Index dim, std::uint64_t seed) {
  if (dim < 1) throw Error("random_unitary: dim must be at least 1");
  Rng rng(seed);
  const Matrix g = rng.gaussian_matrix(dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
  }
  return q;
}

Matrix random_unitary_exp(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  Matrix g = rng.gaussian_matrix(dim, dim);
  const Matrix h = (g + g.adjoint()) / 2.0;
  Spectrum s = hermitian_eig(h);
  Vector phases(dim);
  for (Index i = 0; i < dim; ++i) {
    phases(i) = std::exp(Complex(0.0, s.values(i)));
  }
  return s.vectors * phases.asDiagonal() * s.vectors.adjoint();
}

Matrix complete_unitary_columns(Matrix partial, const std::vector<Index>& given) {
  const Index n = partial.rows();
  if (partial.cols() != n) {
    throw NotSquare("complete_unitary_columns: matrix is not square");
  }
  std::vector<bool> is_given(static_cast<std::size_t>(n), false);
  std::vector<Vector> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (Index j : given) {
    is_given[static_cast<std::size_t>(j)] = true;
    basis.push_back(partial.col(j));
  }
  Index next_candidate = 0;
  auto orthogonalize = [&basis](Vector v) {
    for (const Vector& b : basis) {
      v -= b * (b.dot(v));
    }
    return v;
  };
  for (Index j = 0; j < n; ++j) {
    if (is_given[static_cast<std::size_t>(j)]) continue;
    Vector accepted;
    while (true) {
      if (next_candidate >= n) {
        throw Error("complete_unitary_columns: ran out of candidates");
      }
      Vector v = Vector::Zero(n);
      v(next_candidate++) = 1.0;
      v = orthogonalize(std::move(v));
      const double norm = v.norm();
      if (norm > kCompletionResidual) {
        v /= norm;
        v = orthogonalize(std::move(v));
        accepted = v / v.norm();
        break;
      }
    }
    partial.col(j) = accepted;
    basis.push_back(std::move(accepted));
  }
  return partial;
}

Matrix complete_leading_columns(const Matrix& cols) {
  const Index n = cols.rows();
  Matrix partial = Matrix::Zero(n, n);
  std::vector<Index> given;
  for (Index j = 0; j < cols.cols(); ++j) {
    partial.col(j) = cols.col(j);
    given.push_back(j);
  }
  return complete_unitary_columns(std::move(partial), given);
}

}  // namespace cohlab
