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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slc/presets.hpp"

namespace slc::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kConfigError = 2, kNumericalError = 3 };

struct ScanAxis {
  double lo = 1.0;
  double hi = 1.0;
  std::size_t count = 1;
};

/// Everything that determines a run's outputs. Serialized as manifest.json;
/// the same JSON shape is accepted by --config.
struct RunManifest {
  std::string command;
  std::string preset;
  std::string config_path;

  // uncertainty overrides
  std::optional<double> bound;
  std::optional<std::vector<std::size_t>> grid_counts;
  std::optional<std::size_t> test_count;
  std::optional<std::uint64_t> seed;
  std::optional<TestDistribution> distribution;

  // training overrides
  std::optional<double> step_size;
  std::optional<std::size_t> max_iters;
  std::optional<std::size_t> log_stride;
  std::optional<double> target_fidelity;
  std::optional<std::size_t> plateau_window;
  std::optional<double> plateau_tol;

  // problem overrides
  std::optional<double> horizon;
  std::optional<std::size_t> slices;

  std::string controls_path;    // test, scan
  std::vector<ScanAxis> scan;   // scan: one axis per uncertainty parameter
  std::string output_dir = ".";

  std::string tool_version{kToolVersion};
  std::string rng_algorithm{kRngAlgorithm};
};

[[nodiscard]] std::string manifest_to_json(const RunManifest& m);

/// Fills `m` from a manifest/config JSON document; fields present in the
/// document overwrite those in `m`.
void merge_manifest_json(RunManifest& m, const std::string& json_text);

/// The preset named by the manifest with every override applied.
[[nodiscard]] Preset resolve(const RunManifest& m);

/// Worker threads for gradient evaluation; never affects outputs.
struct RuntimeOptions {
  std::size_t workers = 1;
};

void cmd_train(const RunManifest& m, const RuntimeOptions& rt, std::ostream& log);
void cmd_test(const RunManifest& m, std::ostream& log);
void cmd_scan(const RunManifest& m, std::ostream& log);
void cmd_presets(std::ostream& out);

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slc::cli
