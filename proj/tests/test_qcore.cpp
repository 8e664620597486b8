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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "slc/error.hpp"
#include "slc/presets.hpp"
#include "slc/qcore.hpp"

namespace {

using slc::Complex;
using slc::ComplexMatrix;
using namespace slc::gates;

constexpr double kPi = std::numbers::pi;

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

TEST(Kron, IdentityTimesIdentityIsIdentity) {
  EXPECT_EQ(slc::kron(slc::identity(2), slc::identity(2)), slc::identity(4));
}

TEST(Kron, PauliZTensorPauliZIsDiagonal) {
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1, -1, -1, 1;
  EXPECT_EQ(slc::kron(pauli_z(), pauli_z()), expected);
}

TEST(Kron, DimensionIsProduct) {
  const auto k = slc::kron(ComplexMatrix::Ones(3, 3), ComplexMatrix::Ones(2, 2));
  EXPECT_EQ(k.rows(), 6);
  EXPECT_EQ(k.cols(), 6);
}

TEST(Kron, LeftFactorIndexesCoarseBlocks) {
  // sigma_x (x) I swaps the two 2x2 diagonal blocks
  const auto k = slc::kron(pauli_x(), slc::identity(2));
  EXPECT_EQ(k.block(0, 2, 2, 2), slc::identity(2));
  EXPECT_EQ(k.block(0, 0, 2, 2), ComplexMatrix::Zero(2, 2));
}

TEST(ExpmNegI, ZeroGeneratorGivesIdentity) {
  EXPECT_LT(max_abs_diff(slc::expm_neg_i(ComplexMatrix::Zero(3, 3), 1.0), slc::identity(3)), 1e-15);
}

TEST(ExpmNegI, PauliZForTimePiIsMinusIdentity) {
  EXPECT_LT(max_abs_diff(slc::expm_neg_i(pauli_z(), kPi), -slc::identity(2)), 1e-14);
}

TEST(ExpmNegI, PauliXForHalfPiIsMinusIPauliX) {
  const ComplexMatrix expected = Complex(0, -1) * pauli_x();
  EXPECT_LT(max_abs_diff(slc::expm_neg_i(pauli_x(), kPi / 2), expected), 1e-14);
}

TEST(ExpmNegI, RejectsNonHermitian) {
  ComplexMatrix h = pauli_x();
  h(0, 1) = 2.0;
  try {
    (void)slc::expm_neg_i(h, 1.0);
    FAIL() << "expected NotHermitian";
  } catch (const slc::Error& e) {
    EXPECT_EQ(e.kind(), slc::ErrorKind::NotHermitian);
  }
}

TEST(ExpmNegI, MatchesPadeReferenceAndStaysUnitary) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dt_dist(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index d = 2 + trial % 7;
    const double norm = 0.5 + 99.5 * (trial % 10) / 9.0;  // ||h dt|| up to 100
    const ComplexMatrix h = oracle::random_hermitian(rng, d, norm);
    const double dt = dt_dist(rng) >= 0 ? 1.0 : -1.0;
    const ComplexMatrix u = slc::expm_neg_i(h, dt);
    EXPECT_LE((u.adjoint() * u - slc::identity(d)).norm(), 1e-10) << "trial " << trial;
    if (norm <= 10) {
      EXPECT_LT(max_abs_diff(u, oracle::pade_expm_neg_i(h, dt)), 1e-11) << "trial " << trial;
    }
  }
}

TEST(ExpmNegI, SemigroupProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index d = 2 + trial % 7;
    const ComplexMatrix h = oracle::random_hermitian(rng, d, 5.0);
    const double t1 = 0.1 + 0.05 * trial;
    const double t2 = 1.3 - 0.02 * trial;
    const ComplexMatrix lhs = slc::expm_neg_i(h, t1 + t2);
    const ComplexMatrix rhs = slc::expm_neg_i(h, t1) * slc::expm_neg_i(h, t2);
    EXPECT_LT(max_abs_diff(lhs, rhs), 1e-10);
  }
}

TEST(HsInner, TraceOfIdentity) {
  EXPECT_EQ(slc::hs_inner(slc::identity(5), slc::identity(5)), Complex(5, 0));
}

TEST(HsInner, PauliOrthogonality) {
  EXPECT_EQ(slc::hs_inner(pauli_x(), pauli_z()), Complex(0, 0));
}

TEST(HsInner, PhaseFactorsOut) {
  std::mt19937_64 rng(3);
  const ComplexMatrix u = oracle::random_unitary(rng, 4);
  const Complex phase = std::polar(1.0, 0.7);
  const Complex v = slc::hs_inner(u, phase * u);
  EXPECT_NEAR(std::abs(v - 4.0 * phase), 0.0, 1e-13);
}

TEST(HsInner, ConjugateSymmetric) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = oracle::random_hermitian(rng, 3) + Complex(0, 1) * oracle::random_hermitian(rng, 3);
    const ComplexMatrix b = oracle::random_unitary(rng, 3);
    EXPECT_NEAR(std::abs(slc::hs_inner(a, b) - std::conj(slc::hs_inner(b, a))), 0.0, 1e-14);
  }
}

TEST(HsInner, DimensionMismatchThrows) {
  try {
    (void)slc::hs_inner(slc::identity(2), slc::identity(3));
    FAIL();
  } catch (const slc::Error& e) {
    EXPECT_EQ(e.kind(), slc::ErrorKind::DimMismatch);
  }
}

TEST(GateFidelity, SelfAndGlobalPhase) {
  std::mt19937_64 rng(9);
  const ComplexMatrix u = oracle::random_unitary(rng, 4);
  EXPECT_NEAR(slc::gate_fidelity(u, u), 1.0, 1e-14);
  EXPECT_NEAR(slc::gate_fidelity(u, std::polar(1.0, -2.1) * u), 1.0, 1e-14);
}

TEST(GateFidelity, HadamardVsIdentityIsZero) {
  EXPECT_NEAR(slc::gate_fidelity(hadamard(), slc::identity(2)), 0.0, 1e-15);
}

TEST(GateFidelity, RejectsNonUnitary) {
  try {
    (void)slc::gate_fidelity(slc::identity(2), 2.0 * slc::identity(2));
    FAIL();
  } catch (const slc::Error& e) {
    EXPECT_EQ(e.kind(), slc::ErrorKind::NotUnitary);
  }
}

TEST(GateFidelity, SymmetricBoundedAndUnitarilyInvariant) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index d = 2 + t % 4;
    const ComplexMatrix a = oracle::random_unitary(rng, d);
    const ComplexMatrix b = oracle::random_unitary(rng, d);
    const ComplexMatrix w = oracle::random_unitary(rng, d);
    const double f = slc::gate_fidelity(a, b);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
    EXPECT_NEAR(f, slc::gate_fidelity(b, a), 1e-14);
    EXPECT_NEAR(f, slc::gate_fidelity(w * a, w * b), 1e-12);
    EXPECT_NEAR(f, slc::gate_fidelity(a * w, b * w), 1e-12);
  }
}

TEST(PhiObjective, SelfOverlapIsDSquared) {
  std::mt19937_64 rng(17);
  const ComplexMatrix u = oracle::random_unitary(rng, 3);
  EXPECT_NEAR(slc::phi_objective(u, u), 9.0, 1e-12);
  EXPECT_NEAR(slc::phi_objective(hadamard(), slc::identity(2)), 0.0, 1e-15);
}

TEST(PhiObjective, EqualsSquaredScaledFidelity) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index d = 2 + t % 5;
    const ComplexMatrix a = oracle::random_unitary(rng, d);
    const ComplexMatrix b = oracle::random_unitary(rng, d);
    const double df = static_cast<double>(d) * slc::gate_fidelity(a, b);
    EXPECT_NEAR(slc::phi_objective(a, b), df * df, 1e-12);
  }
}

TEST(Predicates, HermitianAndUnitary) {
  EXPECT_TRUE(slc::is_hermitian(pauli_y()));
  EXPECT_FALSE(slc::is_hermitian(Complex(0, 1) * pauli_y() + pauli_x() * Complex(0, 1)));
  EXPECT_TRUE(slc::is_unitary(ccnot()));
  EXPECT_FALSE(slc::is_unitary(ComplexMatrix::Ones(2, 2)));
}

}  // namespace
