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

#include <filesystem>
#include <string>
#include <vector>

#include "slc/model.hpp"

namespace slc::io {

/// Shortest decimal form that parses back to the same double.
[[nodiscard]] std::string format_double(double v);

/// Parses a full-string decimal; throws Error{InvalidConfig} on junk.
[[nodiscard]] double parse_double(const std::string& text);

/// Comma-separated table with a mandatory header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);
[[nodiscard]] CsvTable read_csv(const std::filesystem::path& path);

/// controls.csv: header m,j,t_start,amplitude; one row per (channel, slice).
void write_controls(const std::filesystem::path& path, const ControlProblem& p,
                    const ControlField& u);

/// Reads controls.csv back into a field shaped for `p`. Throws
/// Error{ShapeMismatch} when the file does not cover exactly M x N entries.
[[nodiscard]] ControlField read_controls(const std::filesystem::path& path,
                                         const ControlProblem& p);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace slc::io
