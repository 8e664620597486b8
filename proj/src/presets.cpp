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

#include "slc/presets.hpp"

#include <cmath>

#include "slc/error.hpp"

namespace slc {

namespace gates {

namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix real_matrix(Eigen::Index d, std::initializer_list<double> rows) {
  ComplexMatrix m(d, d);
  auto it = rows.begin();
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = *it++;
  }
  return m;
}

}  // namespace

ComplexMatrix pauli_x() { return real_matrix(2, {0, 1, 1, 0}); }

ComplexMatrix pauli_y() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = -kI;
  m(1, 0) = kI;
  return m;
}

ComplexMatrix pauli_z() { return real_matrix(2, {1, 0, 0, -1}); }

ComplexMatrix gell_mann_1() { return real_matrix(3, {0, 1, 0, 1, 0, 0, 0, 0, 0}); }
ComplexMatrix gell_mann_3() { return real_matrix(3, {1, 0, 0, 0, -1, 0, 0, 0, 0}); }
ComplexMatrix gell_mann_4() { return real_matrix(3, {0, 0, 1, 0, 0, 0, 1, 0, 0}); }
ComplexMatrix gell_mann_6() { return real_matrix(3, {0, 0, 0, 0, 0, 1, 0, 1, 0}); }

ComplexMatrix spin_op(char axis, int site, int sites) {
  ComplexMatrix sigma;
  switch (axis) {
    case 'x': sigma = pauli_x(); break;
    case 'y': sigma = pauli_y(); break;
    case 'z': sigma = pauli_z(); break;
    default: throw Error(ErrorKind::InvalidConfig, std::string("unknown spin axis ") + axis);
  }
  if (site < 0 || site >= sites) throw Error(ErrorKind::InvalidConfig, "spin site out of range");
  ComplexMatrix out = identity(1);
  for (int n = 0; n < sites; ++n) out = kron(out, n == site ? ComplexMatrix(0.5 * sigma) : identity(2));
  return out;
}

ComplexMatrix hadamard() { return real_matrix(2, {1, 1, 1, -1}) / std::sqrt(2.0); }

ComplexMatrix u3x3() {
  const double a = 1.0 / std::sqrt(3.0);
  const double b = 1.0 / std::sqrt(2.0);
  const double c = 1.0 / std::sqrt(6.0);
  return real_matrix(3, {-a, b, c, -a, 0, -2 * c, -a, -b, c});
}

ComplexMatrix swap() {
  return real_matrix(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
}

ComplexMatrix cphase() {
  return real_matrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
}

ComplexMatrix chadamard() {
  ComplexMatrix m = identity(4);
  m.bottomRightCorner(2, 2) = hadamard();
  return m;
}

ComplexMatrix ccnot() {
  ComplexMatrix m = identity(8);
  m(6, 6) = 0.0;
  m(7, 7) = 0.0;
  m(6, 7) = 1.0;
  m(7, 6) = 1.0;
  return m;
}

}  // namespace gates

namespace {

constexpr std::size_t kTestSamples = 1000;
constexpr std::uint64_t kDefaultSeed = 20170101;

Preset two_level_hadamard() {
  Preset ps;
  ps.name = "two_level_hadamard";
  ps.description = "Two-level Hadamard, H = e0*sigma_z + e1*u_x(t)*sigma_x, nominal training";
  ps.time_unit = "a.u.";
  ps.target_name = "Hadamard";

  ControlProblem& p = ps.problem;
  p.id = ps.name;
  p.dim = 2;
  p.drift = gates::pauli_z();
  p.drift_coeff = 1.0;
  p.controls.push_back({"u_x", gates::pauli_x(), -5.0, 5.0, ChannelGroup::None,
                        InitialProfile::sine()});
  p.horizon = 3.0;
  p.slices = 20;
  p.target = gates::hadamard();
  p.wiring = {2, 0, {1}, {}};

  // One grid point per axis is the nominal sample.
  ps.uncertainty = {{{0.2, 1}, {0.2, 1}}, TestDistribution::Uniform, kTestSamples, kDefaultSeed};
  ps.train.step_size = 0.1;
  ps.train.max_iters = 50000;
  ps.train.log_stride = 10;
  ps.defaulted = {"horizon T=3", "slices N=20", "bounds [-5,5]", "initial field sin t",
                  "test bound E=0.2", "max_iters", "seed"};
  return ps;
}

Preset three_level_u33() {
  Preset ps;
  ps.name = "three_level_u33";
  ps.description = "V-type three-level system, Gell-Mann drift and controls, target U3x3";
  ps.time_unit = "a.u.";
  ps.target_name = "U3x3";

  ControlProblem& p = ps.problem;
  p.id = ps.name;
  p.dim = 3;
  p.drift = gates::gell_mann_3();
  p.drift_coeff = 1.0;
  p.controls.push_back({"u_1", gates::gell_mann_1(), -5.0, 5.0, ChannelGroup::None,
                        InitialProfile::sine()});
  p.controls.push_back({"u_2", gates::gell_mann_4(), -5.0, 5.0, ChannelGroup::None,
                        InitialProfile::sine()});
  p.controls.push_back({"u_3", gates::gell_mann_6(), -5.0, 5.0, ChannelGroup::None,
                        InitialProfile::sine()});
  p.horizon = 8.0;
  p.slices = 40;
  p.target = gates::u3x3();
  // eps_0 on the drift, one shared eps_1 on every control.
  p.wiring = {2, 0, {1, 1, 1}, {}};

  ps.uncertainty = {{{0.2, 5}, {0.2, 5}}, TestDistribution::Uniform, kTestSamples, kDefaultSeed};
  ps.train.step_size = 0.1;
  ps.train.max_iters = 1000000;
  ps.train.log_stride = 100;
  ps.defaulted = {"seed"};
  return ps;
}

Preset superconducting(const std::string& gate) {
  Preset ps;
  ps.name = "sc_" + gate;
  ps.time_unit = "ns (frequencies in GHz)";

  const ComplexMatrix i2 = identity(2);
  const ComplexMatrix sx = gates::pauli_x();
  const ComplexMatrix sz = gates::pauli_z();
  const double levels_q1 = 5.0;
  const double levels_q2 = 5.0;
  const double zz_weight = 1.0 / (6.0 * std::sqrt(levels_q1 * levels_q2));

  ControlProblem& p = ps.problem;
  p.id = ps.name;
  p.dim = 4;
  p.drift = ComplexMatrix::Zero(4, 4);
  p.drift_coeff = 1.0;
  p.controls.push_back({"omega_1", 0.5 * kron(sz, i2), -5.0, 5.0, ChannelGroup::None,
                        InitialProfile::sine()});
  p.controls.push_back({"omega_2", 0.5 * kron(i2, sz), -5.0, 5.0, ChannelGroup::None,
                        InitialProfile::sine()});
  p.controls.push_back({"Omega_c", 0.5 * (kron(sx, sx) + zz_weight * kron(sz, sz)), -0.8, 0.8,
                        ChannelGroup::None, InitialProfile::sine(0.05)});
  // omega_3 = omega_4 = 1 GHz
  p.fixed_terms.push_back({"omega_3", 1.0, 0.5 * kron(sx, i2)});
  p.fixed_terms.push_back({"omega_4", 1.0, 0.5 * kron(i2, sx)});
  p.horizon = 8.0;
  p.slices = 40;
  p.wiring = {3, std::nullopt, {0, 1, 2}, {std::nullopt, std::nullopt}};

  if (gate == "swap") {
    p.target = gates::swap();
    ps.target_name = "SWAP";
  } else if (gate == "cphase") {
    p.target = gates::cphase();
    ps.target_name = "CPhase";
  } else {
    p.target = gates::chadamard();
    ps.target_name = "CHadamard";
  }
  ps.description = "Two coupled superconducting qubits, target " + ps.target_name;

  ps.uncertainty = {{{0.1, 5}, {0.1, 5}, {0.1, 5}},
                    TestDistribution::Uniform,
                    kTestSamples,
                    kDefaultSeed};
  ps.train.step_size = 0.1;
  ps.train.max_iters = 200000;
  ps.train.log_stride = 100;
  ps.defaulted = {"max_iters", "seed"};
  return ps;
}

Preset spin_chain(int controlled_sites) {
  constexpr int kSites = 3;
  Preset ps;
  ps.name = "spin_ccnot_" + std::to_string(2 * controlled_sites);
  ps.description = "Heisenberg XXX chain of 3 spins, alternating x/y controls on " +
                   std::to_string(controlled_sites) + " spins, target CCNOT";
  ps.time_unit = "1/J";
  ps.target_name = "CCNOT";

  ControlProblem& p = ps.problem;
  p.id = ps.name;
  p.dim = 8;
  p.drift = ComplexMatrix::Zero(8, 8);
  for (int n = 0; n + 1 < kSites; ++n) {
    for (char axis : {'x', 'y', 'z'}) {
      p.drift += gates::spin_op(axis, n, kSites) * gates::spin_op(axis, n + 1, kSites);
    }
  }
  p.drift_coeff = 1.0;  // J
  for (int n = 0; n < controlled_sites; ++n) {
    const std::string site = std::to_string(n + 1);
    p.controls.push_back({"u_" + site + "^x", gates::spin_op('x', n, kSites), -20.0, 20.0,
                          ChannelGroup::X, InitialProfile::sine()});
    p.controls.push_back({"u_" + site + "^y", gates::spin_op('y', n, kSites), -20.0, 20.0,
                          ChannelGroup::Y, InitialProfile::sine()});
  }
  p.horizon = 20.0;
  p.slices = 40;
  p.scheme = Scheme::AlternatingXY;
  p.target = gates::ccnot();
  // eps_0 on the exchange term, one shared eps_c on every control.
  p.wiring = {2, 0, std::vector<std::optional<std::size_t>>(p.controls.size(), 1), {}};

  ps.uncertainty = {{{0.2, 5}, {0.2, 5}},
                    TestDistribution::TruncatedGaussian,
                    kTestSamples,
                    kDefaultSeed};
  ps.train.step_size = 0.01;
  ps.train.max_iters = 200000;
  ps.train.log_stride = 100;
  ps.defaulted = {"uncertainty bound E=0.2", "slices N=40", "bounds [-20,20]",
                  "initial field sin t", "seed"};
  return ps;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "two_level_hadamard", "three_level_u33", "sc_swap",      "sc_cphase",
      "sc_chadamard",       "spin_ccnot_4",    "spin_ccnot_6",
  };
  return names;
}

Preset preset(std::string_view name) {
  if (name == "two_level_hadamard") return two_level_hadamard();
  if (name == "three_level_u33") return three_level_u33();
  if (name == "sc_swap") return superconducting("swap");
  if (name == "sc_cphase") return superconducting("cphase");
  if (name == "sc_chadamard") return superconducting("chadamard");
  if (name == "spin_ccnot_4") return spin_chain(2);
  if (name == "spin_ccnot_6") return spin_chain(3);
  throw Error(ErrorKind::UnknownPreset, "no preset named '" + std::string(name) + "'");
}

}  // namespace slc
