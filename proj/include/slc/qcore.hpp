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

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace slc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-9;

/// max |A - A^dagger| <= tol. Non-square matrices are never Hermitian.
[[nodiscard]] bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/// ||U^dagger U - I||_F <= tol.
[[nodiscard]] bool is_unitary(const ComplexMatrix& u, double tol = kUnitaryTol);

[[nodiscard]] ComplexMatrix identity(Eigen::Index dim);

/// Kronecker product; the left factor indexes the coarse blocks.
[[nodiscard]] ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(-i h dt) for Hermitian h, via h = V diag(lambda) V^dagger.
/// Throws Error{NotHermitian} if h fails is_hermitian(h, herm_tol).
[[nodiscard]] ComplexMatrix expm_neg_i(const ComplexMatrix& h, double dt,
                                       double herm_tol = kHermitianTol);

/// Hilbert-Schmidt inner product tr(a^dagger b).
[[nodiscard]] Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// (1/D) |tr(target^dagger achieved)|; both arguments must be unitary.
[[nodiscard]] double gate_fidelity(const ComplexMatrix& target, const ComplexMatrix& achieved,
                                   double unit_tol = kUnitaryTol);

/// |tr(target^dagger achieved)|^2, the quantity the gradient ascent maximizes.
[[nodiscard]] double phi_objective(const ComplexMatrix& target, const ComplexMatrix& achieved);

}  // namespace slc
