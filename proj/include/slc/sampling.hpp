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
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "slc/model.hpp"

namespace slc {

enum class TestDistribution { Uniform, TruncatedGaussian };

struct UncertaintyParam {
  double bound = 0.0;          // E in [0, 1]; the parameter lives in [1 - E, 1 + E]
  std::size_t grid_count = 1;  // training samples along this axis
};

struct UncertaintySpec {
  std::vector<UncertaintyParam> params;
  TestDistribution test_distribution = TestDistribution::Uniform;
  std::size_t test_count = 1000;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Identifier recorded in run outputs so sampled ensembles can be replayed:
/// 64-bit Mersenne Twister, 53-bit uniform mantissa, Marsaglia polar normals.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/u53/marsaglia-polar";

/// Deterministic uniform and normal variates on top of std::mt19937_64. The
/// mapping from engine output to variates is fixed here rather than left to
/// the standard library's distributions, whose algorithms are unspecified.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Standard normal.
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Cartesian product of per-parameter midpoint grids
/// {1 - E + (2i - 1) E / N_k, i = 1..N_k}; the first parameter varies slowest.
[[nodiscard]] std::vector<UncertaintySample> training_grid(const UncertaintySpec& spec);

/// test_count samples, coordinates i.i.d. uniform on [1 - E_k, 1 + E_k].
[[nodiscard]] std::vector<UncertaintySample> mc_uniform(const UncertaintySpec& spec);

/// test_count samples, coordinates i.i.d. Normal(1, (E_k / 3)^2) restricted to
/// [1 - E_k, 1 + E_k] by rejection.
[[nodiscard]] std::vector<UncertaintySample> mc_truncated_gaussian(const UncertaintySpec& spec);

/// Dispatches on spec.test_distribution.
[[nodiscard]] std::vector<UncertaintySample> test_ensemble(const UncertaintySpec& spec);

}  // namespace slc
