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

#include <random>

#include "oracle.hpp"
#include "slc/model.hpp"
#include "slc/presets.hpp"

namespace fixtures {

/// Two-level system, single sigma_x channel, no drift, target X.
inline slc::ControlProblem rabi_problem(double horizon, std::size_t slices) {
  slc::ControlProblem p;
  p.id = "rabi";
  p.dim = 2;
  p.drift = slc::ComplexMatrix::Zero(2, 2);
  p.controls.push_back({"u_x", slc::gates::pauli_x(), -10.0, 10.0, slc::ChannelGroup::None,
                        slc::InitialProfile::constant(0.0)});
  p.horizon = horizon;
  p.slices = slices;
  p.target = slc::gates::pauli_x();
  p.wiring = {1, std::nullopt, {0}, {}};
  return p;
}

inline slc::ControlField constant_field(const slc::ControlProblem& p, double value) {
  return {p.id, slc::RealMatrix::Constant(static_cast<Eigen::Index>(p.channel_count()),
                                          static_cast<Eigen::Index>(p.slices), value)};
}

inline slc::ControlField random_field(const slc::ControlProblem& p, std::mt19937_64& rng) {
  slc::ControlField u = constant_field(p, 0.0);
  for (std::size_t m = 0; m < p.channel_count(); ++m) {
    std::uniform_real_distribution<double> d(p.controls[m].lower, p.controls[m].upper);
    for (std::size_t j = 0; j < p.slices; ++j) {
      u.amplitudes(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(j)) = d(rng);
    }
  }
  return u;
}

inline slc::UncertaintySample random_sample(const slc::ControlProblem& p, std::mt19937_64& rng,
                                            double bound = 0.3) {
  std::uniform_real_distribution<double> d(1.0 - bound, 1.0 + bound);
  slc::UncertaintySample s;
  for (std::size_t k = 0; k < p.wiring.param_count; ++k) s.eps.push_back(d(rng));
  return s;
}

/// Random Simultaneous problem: drift and M channels with unit-ish norm,
/// each channel wired to its own uncertainty parameter, drift to param 0.
inline slc::ControlProblem random_problem(std::mt19937_64& rng, Eigen::Index dim,
                                          std::size_t channels, std::size_t slices,
                                          double horizon) {
  slc::ControlProblem p;
  p.id = "random";
  p.dim = dim;
  p.drift = oracle::random_hermitian(rng, dim, 1.0);
  for (std::size_t m = 0; m < channels; ++m) {
    p.controls.push_back({"c" + std::to_string(m), oracle::random_hermitian(rng, dim, 1.0), -2.0,
                          2.0, slc::ChannelGroup::None, slc::InitialProfile::sine()});
  }
  p.horizon = horizon;
  p.slices = slices;
  p.target = oracle::random_unitary(rng, dim);
  p.wiring.param_count = channels + 1;
  p.wiring.drift = 0;
  for (std::size_t m = 0; m < channels; ++m) p.wiring.channels.push_back(m + 1);
  return p;
}

}  // namespace fixtures
