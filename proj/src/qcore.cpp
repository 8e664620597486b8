// Copyright 2026 The Robust SLC Authors
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

#include "slc/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slc/error.hpp"

namespace slc {

namespace {

void require_same_square(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a.rows() << "x" << a.cols() << " vs " << b.rows()
        << "x" << b.cols() << ")";
    throw Error(ErrorKind::DimMismatch, msg.str());
  }
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::BadSliceIndex: return "BadSliceIndex";
    case ErrorKind::SchemeMismatch: return "SchemeMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::Diverged: return "Diverged";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  if (a.size() == 0) return true;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols() || u.size() == 0) return false;
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix expm_neg_i(const ComplexMatrix& h, double dt, double herm_tol) {
  if (!is_hermitian(h, herm_tol)) {
    throw Error(ErrorKind::NotHermitian, "expm_neg_i: generator is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const ComplexMatrix& v = eig.eigenvectors();
  Eigen::VectorXcd phase(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    const double theta = -lambda(k) * dt;
    phase(k) = Complex(std::cos(theta), std::sin(theta));
  }
  return v * phase.asDiagonal() * v.adjoint();
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_square(a, b, "hs_inner");
  // tr(a^dagger b) = sum_ij conj(a_ij) b_ij
  return (a.conjugate().cwiseProduct(b)).sum();
}

double gate_fidelity(const ComplexMatrix& target, const ComplexMatrix& achieved, double unit_tol) {
  require_same_square(target, achieved, "gate_fidelity");
  if (!is_unitary(target, unit_tol) || !is_unitary(achieved, unit_tol)) {
    throw Error(ErrorKind::NotUnitary, "gate_fidelity: argument is not unitary");
  }
  const double f = std::abs(hs_inner(target, achieved)) / static_cast<double>(target.rows());
  // Rounding can push |tr| a few ulps past D for exact matches.
  return std::min(f, 1.0);
}

double phi_objective(const ComplexMatrix& target, const ComplexMatrix& achieved) {
  return std::norm(hs_inner(target, achieved));
}

}  // namespace slc
