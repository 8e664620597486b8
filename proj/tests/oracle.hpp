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

// Test-only reference computations. Propagators here go through Eigen's
// Pade scaling-and-squaring exponential, never through slc::expm_neg_i.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "slc/model.hpp"

namespace oracle {

using slc::Complex;
using slc::ComplexMatrix;

inline ComplexMatrix pade_expm_neg_i(const ComplexMatrix& h, double dt) {
  const ComplexMatrix gen = Complex(0.0, -dt) * h;
  return gen.exp();
}

/// Hamiltonian rebuilt term by term from the problem definition.
inline ComplexMatrix hamiltonian(const slc::ControlProblem& p, const slc::ControlField& u,
                                 const slc::UncertaintySample& s, std::size_t j, slc::Half half) {
  auto eps = [&](const std::optional<std::size_t>& i) { return i ? s.eps[*i] : 1.0; };
  ComplexMatrix h = eps(p.wiring.drift) * p.drift_coeff * p.drift;
  for (std::size_t f = 0; f < p.fixed_terms.size(); ++f) {
    h += eps(p.wiring.fixed_terms[f]) * p.fixed_terms[f].coeff * p.fixed_terms[f].op;
  }
  for (std::size_t m = 0; m < p.controls.size(); ++m) {
    const auto g = p.controls[m].group;
    const bool on = half == slc::Half::Full || (half == slc::Half::XHalf && g == slc::ChannelGroup::X) ||
                    (half == slc::Half::YHalf && g == slc::ChannelGroup::Y);
    if (on) h += eps(p.wiring.channels[m]) * u.amplitudes(m, j) * p.controls[m].op;
  }
  return h;
}

inline ComplexMatrix final_unitary(const slc::ControlProblem& p, const slc::ControlField& u,
                                   const slc::UncertaintySample& s) {
  ComplexMatrix acc = ComplexMatrix::Identity(p.dim, p.dim);
  const double dt = p.horizon / static_cast<double>(p.slices);
  for (std::size_t j = 0; j < p.slices; ++j) {
    if (p.scheme == slc::Scheme::Simultaneous) {
      acc = pade_expm_neg_i(hamiltonian(p, u, s, j, slc::Half::Full), dt) * acc;
    } else {
      acc = pade_expm_neg_i(hamiltonian(p, u, s, j, slc::Half::XHalf), dt / 2) * acc;
      acc = pade_expm_neg_i(hamiltonian(p, u, s, j, slc::Half::YHalf), dt / 2) * acc;
    }
  }
  return acc;
}

inline double phi(const slc::ControlProblem& p, const slc::ControlField& u,
                  const slc::UncertaintySample& s) {
  return std::norm((p.target.adjoint() * final_unitary(p, u, s)).trace());
}

/// Central finite differences of phi with respect to every amplitude.
inline Eigen::MatrixXd fd_gradient(const slc::ControlProblem& p, const slc::ControlField& u,
                                   const slc::UncertaintySample& s, double du = 1e-6) {
  Eigen::MatrixXd g(u.amplitudes.rows(), u.amplitudes.cols());
  for (Eigen::Index m = 0; m < g.rows(); ++m) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      slc::ControlField plus = u;
      slc::ControlField minus = u;
      plus.amplitudes(m, j) += du;
      minus.amplitudes(m, j) -= du;
      g(m, j) = (phi(p, plus, s) - phi(p, minus, s)) / (2 * du);
    }
  }
  return g;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index d, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix a(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) a(r, c) = Complex(n(rng), n(rng));
  }
  ComplexMatrix h = (a + a.adjoint()) * 0.5;
  return h * (scale / h.operatorNorm());
}

inline ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index d) {
  return pade_expm_neg_i(random_hermitian(rng, d, 3.0), 1.0);
}

}  // namespace oracle
