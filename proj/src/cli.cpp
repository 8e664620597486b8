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

#include "slc/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slc/error.hpp"
#include "slc/io.hpp"

namespace slc::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string distribution_name(TestDistribution d) {
  return d == TestDistribution::Uniform ? "uniform" : "tgauss";
}

TestDistribution parse_distribution(const std::string& s) {
  if (s == "uniform") return TestDistribution::Uniform;
  if (s == "tgauss") return TestDistribution::TruncatedGaussian;
  throw Error(ErrorKind::InvalidConfig, "distribution must be 'uniform' or 'tgauss', got '" + s + "'");
}

ScanAxis parse_axis(const std::string& text) {
  // lo:hi:count
  const auto a = text.find(':');
  const auto b = text.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) {
    throw Error(ErrorKind::InvalidConfig, "scan axis must look like lo:hi:count, got '" + text + "'");
  }
  ScanAxis axis;
  axis.lo = io::parse_double(text.substr(0, a));
  axis.hi = io::parse_double(text.substr(a + 1, b - a - 1));
  const double count = io::parse_double(text.substr(b + 1));
  if (count < 1 || count != std::floor(count)) {
    throw Error(ErrorKind::InvalidConfig, "scan axis count must be a positive integer");
  }
  axis.count = static_cast<std::size_t>(count);
  return axis;
}

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void take(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j[key].is_null()) v = j[key].get<T>();
}

json trace_point_json(const TracePoint& t) {
  return {{"iteration", t.iteration}, {"avg_fidelity", t.avg_fidelity}};
}

double nominal_fidelity(const ControlProblem& p, const ControlField& u) {
  return gate_fidelity(p.target,
                       propagate(p, u, UncertaintySample::nominal(p.wiring.param_count)).final);
}

void prepare_output(const RunManifest& m) {
  std::error_code ec;
  fs::create_directories(m.output_dir, ec);
  if (ec) throw Error(ErrorKind::InvalidConfig, "cannot create output directory " + m.output_dir);
}

void write_json(const fs::path& path, const json& j) { io::write_text(path, j.dump(2) + "\n"); }

std::vector<double> linspace(const ScanAxis& a) {
  std::vector<double> v(a.count);
  if (a.count == 1) {
    v[0] = a.lo;
    return v;
  }
  const double span = a.hi - a.lo;
  for (std::size_t i = 0; i < a.count; ++i) {
    v[i] = a.lo + span * static_cast<double>(i) / static_cast<double>(a.count - 1);
  }
  v.back() = a.hi;
  return v;
}

std::vector<std::string> eps_header(std::size_t params) {
  std::vector<std::string> h;
  for (std::size_t k = 0; k < params; ++k) h.push_back("eps_" + std::to_string(k));
  return h;
}

}  // namespace

std::string manifest_to_json(const RunManifest& m) {
  json j;
  j["command"] = m.command;
  j["preset"] = m.preset;
  if (!m.config_path.empty()) j["config_path"] = m.config_path;

  json unc = json::object();
  put(unc, "bound", m.bound);
  put(unc, "grid_counts", m.grid_counts);
  put(unc, "test_count", m.test_count);
  put(unc, "seed", m.seed);
  if (m.distribution) unc["distribution"] = distribution_name(*m.distribution);
  j["uncertainty"] = unc;

  json tr = json::object();
  put(tr, "step_size", m.step_size);
  put(tr, "max_iters", m.max_iters);
  put(tr, "log_stride", m.log_stride);
  put(tr, "target_fidelity", m.target_fidelity);
  put(tr, "plateau_window", m.plateau_window);
  put(tr, "plateau_tol", m.plateau_tol);
  j["train"] = tr;

  json pr = json::object();
  put(pr, "horizon", m.horizon);
  put(pr, "slices", m.slices);
  j["problem"] = pr;

  if (!m.controls_path.empty()) j["controls_path"] = m.controls_path;
  if (!m.scan.empty()) {
    json axes = json::array();
    for (const auto& a : m.scan) axes.push_back({{"lo", a.lo}, {"hi", a.hi}, {"count", a.count}});
    j["scan"] = axes;
  }
  j["output_dir"] = m.output_dir;
  j["tool_version"] = m.tool_version;
  j["rng_algorithm"] = m.rng_algorithm;
  return j.dump(2) + "\n";
}

void merge_manifest_json(RunManifest& m, const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::InvalidConfig, "config must be a JSON object");
  try {
    if (j.contains("command")) m.command = j["command"].get<std::string>();
    if (j.contains("preset")) m.preset = j["preset"].get<std::string>();
    if (j.contains("uncertainty")) {
      const json& u = j["uncertainty"];
      take(u, "bound", m.bound);
      take(u, "grid_counts", m.grid_counts);
      take(u, "test_count", m.test_count);
      take(u, "seed", m.seed);
      if (u.contains("distribution")) {
        m.distribution = parse_distribution(u["distribution"].get<std::string>());
      }
    }
    if (j.contains("train")) {
      const json& t = j["train"];
      take(t, "step_size", m.step_size);
      take(t, "max_iters", m.max_iters);
      take(t, "log_stride", m.log_stride);
      take(t, "target_fidelity", m.target_fidelity);
      take(t, "plateau_window", m.plateau_window);
      take(t, "plateau_tol", m.plateau_tol);
    }
    if (j.contains("problem")) {
      const json& p = j["problem"];
      take(p, "horizon", m.horizon);
      take(p, "slices", m.slices);
    }
    if (j.contains("controls_path")) m.controls_path = j["controls_path"].get<std::string>();
    if (j.contains("scan")) {
      m.scan.clear();
      for (const auto& a : j["scan"]) {
        m.scan.push_back({a.at("lo").get<double>(), a.at("hi").get<double>(),
                          a.at("count").get<std::size_t>()});
      }
    }
    if (j.contains("output_dir")) m.output_dir = j["output_dir"].get<std::string>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("bad config field: ") + e.what());
  }
}

Preset resolve(const RunManifest& m) {
  if (m.preset.empty()) throw Error(ErrorKind::InvalidConfig, "no preset selected");
  Preset ps = preset(m.preset);

  if (m.bound) {
    for (auto& prm : ps.uncertainty.params) prm.bound = *m.bound;
  }
  if (m.grid_counts) {
    if (m.grid_counts->size() != ps.uncertainty.params.size()) {
      throw Error(ErrorKind::InvalidConfig,
                  "grid counts need " + std::to_string(ps.uncertainty.params.size()) + " entries");
    }
    for (std::size_t k = 0; k < m.grid_counts->size(); ++k) {
      ps.uncertainty.params[k].grid_count = (*m.grid_counts)[k];
    }
  }
  if (m.test_count) ps.uncertainty.test_count = *m.test_count;
  if (m.seed) ps.uncertainty.seed = *m.seed;
  if (m.distribution) ps.uncertainty.test_distribution = *m.distribution;

  if (m.step_size) ps.train.step_size = *m.step_size;
  if (m.max_iters) ps.train.max_iters = *m.max_iters;
  if (m.log_stride) ps.train.log_stride = *m.log_stride;
  if (m.target_fidelity) ps.train.target_fidelity = *m.target_fidelity;
  if (m.plateau_window) ps.train.plateau_window = *m.plateau_window;
  if (m.plateau_tol) ps.train.plateau_tol = *m.plateau_tol;

  if (m.horizon) ps.problem.horizon = *m.horizon;
  if (m.slices) ps.problem.slices = *m.slices;

  ps.problem.validate();
  ps.uncertainty.validate();
  ps.train.validate();
  return ps;
}

void cmd_train(const RunManifest& m, const RuntimeOptions& rt, std::ostream& log) {
  Preset ps = resolve(m);
  ps.train.workers = rt.workers;
  const ControlProblem& p = ps.problem;
  const auto samples = training_grid(ps.uncertainty);
  prepare_output(m);

  log << "training " << ps.name << " on " << samples.size() << " samples, up to "
      << ps.train.max_iters << " iterations\n";
  const TrainResult r = train(p, samples, ps.train);
  const fs::path out(m.output_dir);

  io::write_controls(out / "controls.csv", p, r.learned);

  io::CsvTable trace;
  trace.header = {"iteration", "avg_fidelity", "avg_infidelity"};
  for (const auto& t : r.trace) {
    trace.rows.push_back({std::to_string(t.iteration), io::format_double(t.avg_fidelity),
                          io::format_double(1.0 - t.avg_fidelity)});
  }
  io::write_csv(out / "trace.csv", trace);

  const AmplitudeStats amp = amplitude_stats(r.learned);
  json res;
  res["preset"] = ps.name;
  res["target"] = ps.target_name;
  res["time_unit"] = ps.time_unit;
  res["training_samples"] = samples.size();
  res["iterations_run"] = r.iterations_run;
  res["training_fidelity"] = r.trace.back().avg_fidelity;
  res["best_training_fidelity"] = r.trace.back().best_fidelity;
  res["initial"] = trace_point_json(r.trace.front());
  res["nominal_fidelity"] = nominal_fidelity(p, r.learned);
  res["per_sample_final"] = r.per_sample_final;
  res["amplitude_stats"] = {{"max_abs", amp.max_abs}, {"mean_abs", amp.mean_abs}};
  res["defaulted"] = ps.defaulted;
  res["tool_version"] = m.tool_version;
  res["rng_algorithm"] = m.rng_algorithm;
  write_json(out / "result.json", res);
  io::write_text(out / "manifest.json", manifest_to_json(m));

  log << "iterations " << r.iterations_run << ", training fidelity " << std::setprecision(10)
      << r.trace.back().avg_fidelity << ", wall time " << std::setprecision(4) << r.wall_time
      << " s\n";
}

void cmd_test(const RunManifest& m, std::ostream& log) {
  const Preset ps = resolve(m);
  const ControlProblem& p = ps.problem;
  if (m.controls_path.empty()) throw Error(ErrorKind::InvalidConfig, "test needs --controls");
  const ControlField u = io::read_controls(m.controls_path, p);
  const auto samples = test_ensemble(ps.uncertainty);
  prepare_output(m);

  const TestReport r = test_controls(p, u, samples);
  const fs::path out(m.output_dir);

  io::CsvTable fids;
  fids.header = {"index", "fidelity"};
  for (std::size_t i = 0; i < r.fidelities.size(); ++i) {
    fids.rows.push_back({std::to_string(i), io::format_double(r.fidelities[i])});
  }
  io::write_csv(out / "fidelities.csv", fids);

  io::CsvTable hist;
  hist.header = {"bin_lo", "bin_hi", "count"};
  for (std::size_t b = 0; b < r.histogram.counts.size(); ++b) {
    hist.rows.push_back({io::format_double(r.histogram.edges[b]),
                         io::format_double(r.histogram.edges[b + 1]),
                         std::to_string(r.histogram.counts[b])});
  }
  io::write_csv(out / "histogram.csv", hist);

  io::CsvTable smp;
  smp.header = {"index"};
  for (auto& h : eps_header(p.wiring.param_count)) smp.header.push_back(h);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::vector<std::string> row{std::to_string(i)};
    for (double e : samples[i].eps) row.push_back(io::format_double(e));
    smp.rows.push_back(std::move(row));
  }
  io::write_csv(out / "samples.csv", smp);

  json rep;
  rep["preset"] = ps.name;
  rep["distribution"] = distribution_name(ps.uncertainty.test_distribution);
  rep["count"] = r.fidelities.size();
  rep["mean"] = r.mean;
  rep["min"] = r.min;
  rep["max"] = r.max;
  rep["std"] = r.std;
  rep["nominal_fidelity"] = nominal_fidelity(p, u);
  rep["histogram_bins"] = r.histogram.counts.size();
  rep["seed"] = ps.uncertainty.seed;
  rep["tool_version"] = m.tool_version;
  rep["rng_algorithm"] = m.rng_algorithm;
  write_json(out / "test_report.json", rep);
  io::write_text(out / "manifest.json", manifest_to_json(m));

  log << "tested " << ps.name << " on " << samples.size() << " "
      << distribution_name(ps.uncertainty.test_distribution) << " samples: mean "
      << std::setprecision(10) << r.mean << ", min " << r.min << "\n";
}

void cmd_scan(const RunManifest& m, std::ostream& log) {
  const Preset ps = resolve(m);
  const ControlProblem& p = ps.problem;
  if (m.controls_path.empty()) throw Error(ErrorKind::InvalidConfig, "scan needs --controls");
  if (m.scan.size() != p.wiring.param_count) {
    throw Error(ErrorKind::InvalidConfig, "scan needs one --grid axis per uncertainty parameter (" +
                                              std::to_string(p.wiring.param_count) + ")");
  }
  const ControlField u = io::read_controls(m.controls_path, p);
  prepare_output(m);

  std::vector<std::vector<double>> axes;
  std::size_t total = 1;
  for (const auto& a : m.scan) {
    if (a.count < 1) throw Error(ErrorKind::InvalidConfig, "scan axis count must be >= 1");
    axes.push_back(linspace(a));
    total *= a.count;
  }
  std::vector<UncertaintySample> grid;
  grid.reserve(total);
  std::vector<std::size_t> idx(axes.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    UncertaintySample s;
    for (std::size_t k = 0; k < axes.size(); ++k) s.eps.push_back(axes[k][idx[k]]);
    grid.push_back(std::move(s));
    for (std::size_t k = axes.size(); k-- > 0;) {
      if (++idx[k] < axes[k].size()) break;
      idx[k] = 0;
    }
  }

  const auto points = robustness_scan(p, u, grid);
  io::CsvTable t;
  t.header = eps_header(p.wiring.param_count);
  t.header.push_back("fidelity");
  for (const auto& pt : points) {
    std::vector<std::string> row;
    for (double e : pt.sample.eps) row.push_back(io::format_double(e));
    row.push_back(io::format_double(pt.fidelity));
    t.rows.push_back(std::move(row));
  }
  io::write_csv(fs::path(m.output_dir) / "scan.csv", t);
  io::write_text(fs::path(m.output_dir) / "manifest.json", manifest_to_json(m));
  log << "scanned " << points.size() << " points\n";
}

void cmd_presets(std::ostream& out) {
  out << "Settings not listed under 'defaulted' follow the published experiment.\n\n";
  for (const auto& name : preset_names()) {
    const Preset ps = preset(name);
    const ControlProblem& p = ps.problem;
    out << name << "\n"
        << "  " << ps.description << "\n"
        << "  dim " << p.dim << ", controls " << p.channel_count() << ", slices " << p.slices
        << ", horizon " << p.horizon << " " << ps.time_unit << ", scheme "
        << (p.scheme == Scheme::Simultaneous ? "simultaneous" : "alternating-xy") << "\n"
        << "  target " << ps.target_name << ", uncertainty params " << p.wiring.param_count
        << " (E =";
    for (const auto& prm : ps.uncertainty.params) out << " " << prm.bound;
    out << "; grid";
    for (const auto& prm : ps.uncertainty.params) out << " " << prm.grid_count;
    out << "), test " << distribution_name(ps.uncertainty.test_distribution) << " x"
        << ps.uncertainty.test_count << ", step " << ps.train.step_size << ", max_iters "
        << ps.train.max_iters << "\n";
    out << "  defaulted:";
    if (ps.defaulted.empty()) out << " (none)";
    for (std::size_t i = 0; i < ps.defaulted.size(); ++i) {
      out << (i ? ", " : " ") << ps.defaulted[i];
    }
    out << "\n\n";
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust quantum gate synthesis by sampling-based learning control"};
  app.require_subcommand(1);

  RunManifest m;
  RuntimeOptions rt;
  std::string config_path;
  std::string distribution;
  std::vector<std::string> grid_axes;
  std::vector<std::size_t> grid_counts;
  double bound = 0, step_size = 0, target_fidelity = 0, horizon = 0;
  std::size_t max_iters = 0, samples = 0, log_stride = 0, slices = 0;
  std::uint64_t seed = 0;

  std::vector<CLI::Option*> opts;
  auto add_common = [&](CLI::App* sub, bool wants_controls) {
    sub->add_option("--preset", m.preset, "Preset problem name (see `presets`)");
    sub->add_option("--config", config_path, "JSON config or manifest.json to start from");
    sub->add_option("--out", m.output_dir, "Output directory");
    sub->add_option("--seed", seed, "Seed for the test ensemble RNG");
    sub->add_option("--max-iters", max_iters, "Training iteration budget");
    sub->add_option("--step-size", step_size, "Gradient step size alpha_s");
    sub->add_option("--samples", samples, "Number of test samples");
    sub->add_option("--distribution", distribution, "Test distribution: uniform | tgauss");
    sub->add_option("--bound", bound, "Uncertainty bound E applied to every parameter");
    sub->add_option("--grid-counts", grid_counts, "Training grid points per parameter")
        ->delimiter(',');
    sub->add_option("--log-stride", log_stride, "Record the trace every k iterations");
    sub->add_option("--target-fidelity", target_fidelity, "Stop once training fidelity reaches this");
    sub->add_option("--horizon", horizon, "Override total time T");
    sub->add_option("--slices", slices, "Override number of time slices N");
    sub->add_option("--workers", rt.workers, "Threads for gradient evaluation");
    if (wants_controls) sub->add_option("--controls", m.controls_path, "controls.csv to evaluate");
  };

  CLI::App* train_cmd = app.add_subcommand("train", "Learn robust controls on the training grid");
  add_common(train_cmd, false);
  CLI::App* test_cmd = app.add_subcommand("test", "Monte Carlo test of learned controls");
  add_common(test_cmd, true);
  CLI::App* scan_cmd = app.add_subcommand("scan", "Fidelity over a grid of uncertainty values");
  add_common(scan_cmd, true);
  scan_cmd->add_option("--grid", grid_axes, "Axis lo:hi:count, one per uncertainty parameter");
  app.add_subcommand("presets", "List available preset problems");

  std::vector<const char*> argv{"slc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (command == "presets") {
      cmd_presets(out);
      return kSuccess;
    }
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw Error(ErrorKind::InvalidConfig, "cannot read config " + config_path);
      std::stringstream buf;
      buf << in.rdbuf();
      RunManifest from_file;
      merge_manifest_json(from_file, buf.str());
      // command-line values win over the file
      RunManifest cli_values = m;
      m = from_file;
      m.config_path = config_path;
      if (sub->count("--preset")) m.preset = cli_values.preset;
      if (sub->count("--out") || from_file.output_dir.empty()) m.output_dir = cli_values.output_dir;
      if (!cli_values.controls_path.empty()) m.controls_path = cli_values.controls_path;
    }
    m.command = command;
    if (sub->count("--seed")) m.seed = seed;
    if (sub->count("--max-iters")) m.max_iters = max_iters;
    if (sub->count("--step-size")) m.step_size = step_size;
    if (sub->count("--samples")) m.test_count = samples;
    if (sub->count("--distribution")) m.distribution = parse_distribution(distribution);
    if (sub->count("--bound")) m.bound = bound;
    if (sub->count("--grid-counts")) m.grid_counts = grid_counts;
    if (sub->count("--log-stride")) m.log_stride = log_stride;
    if (sub->count("--target-fidelity")) m.target_fidelity = target_fidelity;
    if (sub->count("--horizon")) m.horizon = horizon;
    if (sub->count("--slices")) m.slices = slices;
    if (!grid_axes.empty()) {
      m.scan.clear();
      for (const auto& g : grid_axes) m.scan.push_back(parse_axis(g));
    }
    if (rt.workers < 1) rt.workers = 1;

    if (command == "train") cmd_train(m, rt, out);
    if (command == "test") cmd_test(m, out);
    if (command == "scan") cmd_scan(m, out);
    return kSuccess;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool numerical = e.kind() == ErrorKind::Diverged || e.kind() == ErrorKind::NotUnitary;
    return numerical ? kNumericalError : kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace slc::cli
