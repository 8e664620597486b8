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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slc/qcore.hpp"

namespace slc {

enum class Scheme { Simultaneous, AlternatingXY };
enum class ChannelGroup { None, X, Y };
enum class Half { Full, XHalf, YHalf };

/// Seed pulse shape, evaluated at slice midpoints.
struct InitialProfile {
  enum class Kind { Sine, Constant };
  Kind kind = Kind::Sine;
  double amplitude = 1.0;  // Sine: amplitude * sin(t); Constant: amplitude

  [[nodiscard]] double operator()(double t) const;
  [[nodiscard]] std::string name() const;

  static InitialProfile sine(double amplitude = 1.0) { return {Kind::Sine, amplitude}; }
  static InitialProfile constant(double value) { return {Kind::Constant, value}; }
};

struct ControlChannel {
  std::string label;
  ComplexMatrix op;
  double lower = -5.0;
  double upper = 5.0;
  ChannelGroup group = ChannelGroup::None;
  InitialProfile initial = InitialProfile::sine();
};

/// Always-on Hermitian term that the optimizer never touches.
struct FixedTerm {
  std::string label;
  double coeff = 1.0;
  ComplexMatrix op;
};

/// Which uncertainty parameter multiplies each Hamiltonian term. An empty
/// optional means the term is not subject to uncertainty. The response is
/// linear, f(eps) = eps, for every wired term.
struct UncertaintyWiring {
  std::size_t param_count = 0;
  std::optional<std::size_t> drift;
  std::vector<std::optional<std::size_t>> channels;     // one per control channel
  std::vector<std::optional<std::size_t>> fixed_terms;  // one per fixed term
};

struct ControlProblem {
  std::string id;
  Eigen::Index dim = 0;
  ComplexMatrix drift;
  double drift_coeff = 1.0;
  std::vector<ControlChannel> controls;
  std::vector<FixedTerm> fixed_terms;
  double horizon = 1.0;
  std::size_t slices = 1;
  Scheme scheme = Scheme::Simultaneous;
  ComplexMatrix target;
  UncertaintyWiring wiring;

  [[nodiscard]] std::size_t channel_count() const noexcept { return controls.size(); }
  [[nodiscard]] double slice_width() const noexcept {
    return horizon / static_cast<double>(slices);
  }
  /// Throws Error{InvalidConfig, NotHermitian, NotUnitary, DimMismatch} on a broken definition.
  void validate() const;
};

/// M x N amplitude table, row m = channel, column j = time slice.
struct ControlField {
  std::string problem_id;
  RealMatrix amplitudes;

  [[nodiscard]] std::size_t channels() const noexcept {
    return static_cast<std::size_t>(amplitudes.rows());
  }
  [[nodiscard]] std::size_t slices() const noexcept {
    return static_cast<std::size_t>(amplitudes.cols());
  }
};

struct UncertaintySample {
  std::vector<double> eps;

  /// Multiplier for a wired term; unwired terms see 1.
  [[nodiscard]] double factor(const std::optional<std::size_t>& index) const;

  static UncertaintySample nominal(std::size_t params) {
    return UncertaintySample{std::vector<double>(params, 1.0)};
  }
  friend bool operator==(const UncertaintySample&, const UncertaintySample&) = default;
};

/// Seed field from each channel's initial profile at slice midpoints, clamped into bounds.
[[nodiscard]] ControlField initial_field(const ControlProblem& p);

/// Clamp every amplitude into its channel bounds in place.
void clamp_to_bounds(const ControlProblem& p, ControlField& u);

/// Throws Error{ShapeMismatch} unless u is channel_count x slices.
void check_field_shape(const ControlProblem& p, const ControlField& u);

/// Hamiltonian seen on slice j (0-based). `half` must be Full for Simultaneous
/// problems and XHalf/YHalf for AlternatingXY.
[[nodiscard]] ComplexMatrix effective_hamiltonian(const ControlProblem& p, const ControlField& u,
                                                  const UncertaintySample& s, std::size_t j,
                                                  Half half);

/// One constant-Hamiltonian step of the propagation: which interval, which
/// half of it, and its duration.
struct SliceStep {
  std::size_t interval = 0;
  Half half = Half::Full;
  double dt = 0.0;
};

/// N full steps (Simultaneous) or 2N half steps, x before y (AlternatingXY).
[[nodiscard]] std::vector<SliceStep> slice_steps(const ControlProblem& p);

/// Whether channel c drives the system during `half`.
[[nodiscard]] bool channel_active(const ControlChannel& c, Half half) noexcept;

struct Propagation {
  ComplexMatrix final;
  /// N slice propagators (Simultaneous) or 2N half-slice propagators in
  /// x, y, x, y, ... order (AlternatingXY), earliest first.
  std::vector<ComplexMatrix> slices;
};

[[nodiscard]] Propagation propagate(const ControlProblem& p, const ControlField& u,
                                    const UncertaintySample& s);

struct ScanPoint {
  UncertaintySample sample;
  double fidelity = 0.0;
};

[[nodiscard]] std::vector<ScanPoint> robustness_scan(const ControlProblem& p,
                                                     const ControlField& u,
                                                     const std::vector<UncertaintySample>& grid);

}  // namespace slc
