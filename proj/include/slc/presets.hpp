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

#include <string>
#include <string_view>
#include <vector>

#include "slc/grape.hpp"
#include "slc/model.hpp"
#include "slc/sampling.hpp"

namespace slc {

namespace gates {

[[nodiscard]] ComplexMatrix pauli_x();
[[nodiscard]] ComplexMatrix pauli_y();
[[nodiscard]] ComplexMatrix pauli_z();

/// Gell-Mann matrices used by the three-level model.
[[nodiscard]] ComplexMatrix gell_mann_1();
[[nodiscard]] ComplexMatrix gell_mann_3();
[[nodiscard]] ComplexMatrix gell_mann_4();
[[nodiscard]] ComplexMatrix gell_mann_6();

/// sigma_alpha / 2 acting on spin `site` (0-based, leftmost factor) of a chain of `sites`.
[[nodiscard]] ComplexMatrix spin_op(char axis, int site, int sites);

[[nodiscard]] ComplexMatrix hadamard();
[[nodiscard]] ComplexMatrix u3x3();
[[nodiscard]] ComplexMatrix swap();
[[nodiscard]] ComplexMatrix cphase();
[[nodiscard]] ComplexMatrix chadamard();
[[nodiscard]] ComplexMatrix ccnot();

}  // namespace gates

/// A ready-to-run experiment.
struct Preset {
  std::string name;
  std::string description;
  std::string time_unit;
  std::string target_name;
  ControlProblem problem;
  UncertaintySpec uncertainty;
  TrainConfig train;
  /// Settings chosen here because the source experiment does not state them.
  std::vector<std::string> defaulted;
};

[[nodiscard]] const std::vector<std::string>& preset_names();

/// Throws Error{UnknownPreset} for names not in preset_names().
[[nodiscard]] Preset preset(std::string_view name);

}  // namespace slc
