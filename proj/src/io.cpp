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

#include "slc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "slc/error.hpp"

namespace slc::io {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw Error(ErrorKind::InvalidConfig, "not a number: '" + text + "'");
  }
  return v;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string join(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

}  // namespace

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::InvalidConfig, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::InvalidConfig, "failed writing " + path.string());
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::string text = join(table.header) + "\n";
  for (const auto& row : table.rows) text += join(row) + "\n";
  write_text(path, text);
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot read " + path.string());
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      table.header = split_line(line);
      first = false;
    } else {
      table.rows.push_back(split_line(line));
    }
  }
  if (first) throw Error(ErrorKind::InvalidConfig, path.string() + " has no header row");
  return table;
}

void write_controls(const std::filesystem::path& path, const ControlProblem& p,
                    const ControlField& u) {
  check_field_shape(p, u);
  CsvTable t;
  t.header = {"m", "j", "t_start", "amplitude"};
  const double dt = p.slice_width();
  for (std::size_t m = 0; m < u.channels(); ++m) {
    for (std::size_t j = 0; j < u.slices(); ++j) {
      t.rows.push_back({std::to_string(m), std::to_string(j),
                        format_double(static_cast<double>(j) * dt),
                        format_double(u.amplitudes(static_cast<Eigen::Index>(m),
                                                   static_cast<Eigen::Index>(j)))});
    }
  }
  write_csv(path, t);
}

ControlField read_controls(const std::filesystem::path& path, const ControlProblem& p) {
  const CsvTable t = read_csv(path);
  if (t.header != std::vector<std::string>{"m", "j", "t_start", "amplitude"}) {
    throw Error(ErrorKind::InvalidConfig, path.string() + ": unexpected controls header");
  }
  const auto rows = static_cast<Eigen::Index>(p.channel_count());
  const auto cols = static_cast<Eigen::Index>(p.slices);
  ControlField u{p.id, RealMatrix::Zero(rows, cols)};
  std::vector<bool> seen(static_cast<std::size_t>(rows * cols), false);
  for (const auto& row : t.rows) {
    if (row.size() != 4) throw Error(ErrorKind::InvalidConfig, "controls row needs 4 cells");
    const double m = parse_double(row[0]);
    const double j = parse_double(row[1]);
    if (m < 0 || j < 0 || m >= static_cast<double>(rows) || j >= static_cast<double>(cols) ||
        m != std::floor(m) || j != std::floor(j)) {
      throw Error(ErrorKind::ShapeMismatch, "controls entry (" + row[0] + "," + row[1] +
                                                ") does not fit the problem");
    }
    const auto mi = static_cast<Eigen::Index>(m);
    const auto ji = static_cast<Eigen::Index>(j);
    u.amplitudes(mi, ji) = parse_double(row[3]);
    seen[static_cast<std::size_t>(mi * cols + ji)] = true;
  }
  if (t.rows.size() != seen.size() || std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorKind::ShapeMismatch, "controls file does not cover the problem's " +
                                              std::to_string(rows) + "x" + std::to_string(cols) +
                                              " table");
  }
  return u;
}

}  // namespace slc::io
