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

#include "slc/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slc/error.hpp"

namespace slc {

namespace {

void require_operator(const ComplexMatrix& op, Eigen::Index dim, const std::string& label) {
  if (op.rows() != dim || op.cols() != dim) {
    throw Error(ErrorKind::DimMismatch, "operator '" + label + "' has wrong dimension");
  }
  if (!is_hermitian(op)) {
    throw Error(ErrorKind::NotHermitian, "operator '" + label + "' is not Hermitian");
  }
}

void require_wiring_index(const std::optional<std::size_t>& idx, std::size_t count,
                          const std::string& label) {
  if (idx && *idx >= count) {
    throw Error(ErrorKind::InvalidConfig,
                "uncertainty index for '" + label + "' exceeds parameter count");
  }
}

}  // namespace

double InitialProfile::operator()(double t) const {
  switch (kind) {
    case Kind::Sine: return amplitude * std::sin(t);
    case Kind::Constant: return amplitude;
  }
  return 0.0;
}

std::string InitialProfile::name() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind) {
    case Kind::Sine:
      if (amplitude == 1.0) return "sin t";
      out << amplitude << " sin t";
      break;
    case Kind::Constant: out << "const " << amplitude; break;
  }
  return out.str();
}

void ControlProblem::validate() const {
  if (dim < 1) throw Error(ErrorKind::InvalidConfig, "dimension must be positive");
  if (slices < 1) throw Error(ErrorKind::InvalidConfig, "slice count must be at least 1");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw Error(ErrorKind::InvalidConfig, "horizon must be positive");
  }
  require_operator(drift, dim, "drift");
  for (const auto& c : controls) {
    require_operator(c.op, dim, c.label);
    if (!(c.lower < c.upper)) {
      throw Error(ErrorKind::InvalidConfig, "channel '" + c.label + "' needs lower < upper");
    }
    if (scheme == Scheme::AlternatingXY && c.group == ChannelGroup::None) {
      throw Error(ErrorKind::InvalidConfig,
                  "alternating scheme needs every channel in the x or y group ('" + c.label + "')");
    }
  }
  for (const auto& f : fixed_terms) require_operator(f.op, dim, f.label);
  if (target.rows() != dim || target.cols() != dim) {
    throw Error(ErrorKind::DimMismatch, "target has wrong dimension");
  }
  if (!is_unitary(target)) throw Error(ErrorKind::NotUnitary, "target is not unitary");

  if (wiring.channels.size() != controls.size() ||
      wiring.fixed_terms.size() != fixed_terms.size()) {
    throw Error(ErrorKind::InvalidConfig, "uncertainty wiring does not match term counts");
  }
  require_wiring_index(wiring.drift, wiring.param_count, "drift");
  for (std::size_t m = 0; m < controls.size(); ++m) {
    require_wiring_index(wiring.channels[m], wiring.param_count, controls[m].label);
  }
  for (std::size_t f = 0; f < fixed_terms.size(); ++f) {
    require_wiring_index(wiring.fixed_terms[f], wiring.param_count, fixed_terms[f].label);
  }
}

double UncertaintySample::factor(const std::optional<std::size_t>& index) const {
  if (!index) return 1.0;
  return eps.at(*index);
}

ControlField initial_field(const ControlProblem& p) {
  ControlField u{p.id, RealMatrix(static_cast<Eigen::Index>(p.channel_count()),
                                  static_cast<Eigen::Index>(p.slices))};
  const double dt = p.slice_width();
  for (std::size_t m = 0; m < p.channel_count(); ++m) {
    for (std::size_t j = 0; j < p.slices; ++j) {
      const double t_mid = (static_cast<double>(j) + 0.5) * dt;
      u.amplitudes(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(j)) =
          p.controls[m].initial(t_mid);
    }
  }
  clamp_to_bounds(p, u);
  return u;
}

void clamp_to_bounds(const ControlProblem& p, ControlField& u) {
  for (std::size_t m = 0; m < p.channel_count(); ++m) {
    auto row = u.amplitudes.row(static_cast<Eigen::Index>(m));
    row = row.cwiseMax(p.controls[m].lower).cwiseMin(p.controls[m].upper);
  }
}

void check_field_shape(const ControlProblem& p, const ControlField& u) {
  if (u.channels() != p.channel_count() || u.slices() != p.slices) {
    std::ostringstream msg;
    msg << "control field is " << u.channels() << "x" << u.slices() << ", problem expects "
        << p.channel_count() << "x" << p.slices;
    throw Error(ErrorKind::ShapeMismatch, msg.str());
  }
}

bool channel_active(const ControlChannel& c, Half half) noexcept {
  switch (half) {
    case Half::Full: return true;
    case Half::XHalf: return c.group == ChannelGroup::X;
    case Half::YHalf: return c.group == ChannelGroup::Y;
  }
  return false;
}

std::vector<SliceStep> slice_steps(const ControlProblem& p) {
  std::vector<SliceStep> steps;
  const double dt = p.slice_width();
  if (p.scheme == Scheme::Simultaneous) {
    steps.reserve(p.slices);
    for (std::size_t j = 0; j < p.slices; ++j) steps.push_back({j, Half::Full, dt});
  } else {
    steps.reserve(2 * p.slices);
    for (std::size_t j = 0; j < p.slices; ++j) {
      steps.push_back({j, Half::XHalf, dt / 2});
      steps.push_back({j, Half::YHalf, dt / 2});
    }
  }
  return steps;
}

ComplexMatrix effective_hamiltonian(const ControlProblem& p, const ControlField& u,
                                    const UncertaintySample& s, std::size_t j, Half half) {
  if (j >= p.slices) {
    throw Error(ErrorKind::BadSliceIndex, "slice index " + std::to_string(j) + " out of range");
  }
  if ((half == Half::Full) != (p.scheme == Scheme::Simultaneous)) {
    throw Error(ErrorKind::SchemeMismatch, "half selector does not match propagation scheme");
  }
  if (s.eps.size() != p.wiring.param_count) {
    throw Error(ErrorKind::ShapeMismatch, "uncertainty sample has wrong length");
  }
  check_field_shape(p, u);

  ComplexMatrix h = (s.factor(p.wiring.drift) * p.drift_coeff) * p.drift;
  for (std::size_t f = 0; f < p.fixed_terms.size(); ++f) {
    h += (s.factor(p.wiring.fixed_terms[f]) * p.fixed_terms[f].coeff) * p.fixed_terms[f].op;
  }
  const auto col = static_cast<Eigen::Index>(j);
  for (std::size_t m = 0; m < p.channel_count(); ++m) {
    if (!channel_active(p.controls[m], half)) continue;
    const double amp = u.amplitudes(static_cast<Eigen::Index>(m), col);
    h += (s.factor(p.wiring.channels[m]) * amp) * p.controls[m].op;
  }
  return h;
}

Propagation propagate(const ControlProblem& p, const ControlField& u,
                      const UncertaintySample& s) {
  check_field_shape(p, u);
  Propagation out;
  out.final = identity(p.dim);
  const auto steps = slice_steps(p);
  out.slices.reserve(steps.size());
  for (const auto& step : steps) {
    out.slices.push_back(expm_neg_i(effective_hamiltonian(p, u, s, step.interval, step.half),
                                    step.dt));
    out.final = out.slices.back() * out.final;
  }
  return out;
}

std::vector<ScanPoint> robustness_scan(const ControlProblem& p, const ControlField& u,
                                       const std::vector<UncertaintySample>& grid) {
  std::vector<ScanPoint> out;
  out.reserve(grid.size());
  for (const auto& s : grid) {
    out.push_back({s, gate_fidelity(p.target, propagate(p, u, s).final)});
  }
  return out;
}

}  // namespace slc
