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
#include <functional>
#include <vector>

#include "slc/model.hpp"

namespace slc {

struct TrainConfig {
  double step_size = 0.1;        // alpha_s
  std::size_t max_iters = 1000;  // 0 evaluates the seed field without updating it
  std::size_t log_stride = 1;
  /// Stop when the best logged average fidelity improved by less than
  /// plateau_tol over the last plateau_window logged points (window 0 disables).
  double plateau_tol = 1e-7;
  std::size_t plateau_window = 10000;
  /// Stop once the average training fidelity reaches this value (<= 0 disables).
  double target_fidelity = 0.0;
  /// Threads used for per-sample gradients. Results do not depend on it.
  std::size_t workers = 1;
  /// Optional step-size schedule alpha(k); constant step_size when empty.
  std::function<double(std::size_t)> step_schedule;

  void validate() const;
};

struct TracePoint {
  std::size_t iteration = 0;
  double avg_fidelity = 0.0;
  double best_fidelity = 0.0;  // running maximum of avg_fidelity over logged points
};

struct TrainResult {
  ControlField learned;
  std::vector<TracePoint> trace;
  std::vector<double> per_sample_final;
  std::size_t iterations_run = 0;
  double wall_time = 0.0;  // seconds
};

struct Histogram {
  std::vector<double> edges;  // bins + 1 ascending edges
  std::vector<std::size_t> counts;
};

struct TestReport {
  std::vector<double> fidelities;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double std = 0.0;  // population standard deviation
  Histogram histogram;
};

struct AmplitudeStats {
  double max_abs = 0.0;
  double mean_abs = 0.0;
};

struct Chains {
  std::vector<ComplexMatrix> forward;   // A_j = U_j ... U_1
  std::vector<ComplexMatrix> backward;  // B_j = U_{j+1}^dagger ... U_L^dagger U_F
};

/// Forward and backward propagator chains over the slice list. Requires a
/// non-empty list of unitary slices of the target's dimension.
[[nodiscard]] Chains forward_backward(const std::vector<ComplexMatrix>& slices,
                                      const ComplexMatrix& final, const ComplexMatrix& target);

/// First-order gradient of |tr(U_F^dagger U(T))|^2 with respect to every
/// amplitude, for one uncertainty sample. The sample's multiplier on each
/// channel enters the channel operator.
[[nodiscard]] RealMatrix sample_gradient(const ControlProblem& p, const ControlField& u,
                                         const UncertaintySample& s);

/// Mean of sample_gradient over `samples`, reduced in list order.
[[nodiscard]] RealMatrix averaged_gradient(const ControlProblem& p, const ControlField& u,
                                           const std::vector<UncertaintySample>& samples,
                                           std::size_t workers = 1);

/// Average gate fidelity over `samples` (the training index).
[[nodiscard]] double average_fidelity(const ControlProblem& p, const ControlField& u,
                                      const std::vector<UncertaintySample>& samples);

/// Clamped gradient ascent from the problem's seed field. Throws
/// Error{Diverged} when the average fidelity stops being finite.
[[nodiscard]] TrainResult train(const ControlProblem& p,
                                const std::vector<UncertaintySample>& samples,
                                const TrainConfig& cfg);

/// Same, starting from a given field (clamped into bounds first).
[[nodiscard]] TrainResult train(const ControlProblem& p, ControlField seed,
                                const std::vector<UncertaintySample>& samples,
                                const TrainConfig& cfg);

/// Fidelity of `u` on every sample plus summary statistics. The histogram
/// spans [min, 1] in `bins` equal bins.
[[nodiscard]] TestReport test_controls(const ControlProblem& p, const ControlField& u,
                                       const std::vector<UncertaintySample>& samples,
                                       std::size_t bins = 50);

[[nodiscard]] AmplitudeStats amplitude_stats(const ControlField& u);

}  // namespace slc
