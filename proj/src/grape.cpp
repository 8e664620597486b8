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

#include "slc/grape.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <thread>

#include "slc/error.hpp"

namespace slc {

namespace {

struct SampleEval {
  double fidelity = 0.0;
  RealMatrix gradient;
};

void check_sample(const ControlProblem& p, const UncertaintySample& s) {
  if (s.eps.size() != p.wiring.param_count) {
    throw Error(ErrorKind::ShapeMismatch, "uncertainty sample has wrong length");
  }
}

// One forward pass for the fidelity and, optionally, one backward pass for
// the gradient. B_l is carried backwards as U_{l+1}^dagger B_{l+1}.
SampleEval evaluate_sample(const ControlProblem& p, const std::vector<SliceStep>& steps,
                           const ControlField& u, const UncertaintySample& s,
                           bool with_gradient) {
  const std::size_t count = steps.size();
  std::vector<ComplexMatrix> slices(count);
  std::vector<ComplexMatrix> forward(count);
  ComplexMatrix acc = identity(p.dim);
  for (std::size_t l = 0; l < count; ++l) {
    slices[l] = expm_neg_i(effective_hamiltonian(p, u, s, steps[l].interval, steps[l].half),
                           steps[l].dt);
    acc = slices[l] * acc;
    forward[l] = acc;
  }

  SampleEval out;
  const double d = static_cast<double>(p.dim);
  out.fidelity = std::min(std::abs(hs_inner(p.target, acc)) / d, 1.0);
  if (!with_gradient) return out;

  out.gradient = RealMatrix::Zero(static_cast<Eigen::Index>(p.channel_count()),
                                  static_cast<Eigen::Index>(p.slices));
  ComplexMatrix back = p.target;
  for (std::size_t l = count; l-- > 0;) {
    const ComplexMatrix& a = forward[l];
    const Complex a_b = hs_inner(a, back);
    // tr(B^dagger H A) = tr(H A B^dagger)
    const ComplexMatrix ab_dag = a * back.adjoint();
    const auto col = static_cast<Eigen::Index>(steps[l].interval);
    for (std::size_t m = 0; m < p.channel_count(); ++m) {
      const ControlChannel& ch = p.controls[m];
      if (!channel_active(ch, steps[l].half)) continue;
      const Complex tr_bha = ch.op.transpose().cwiseProduct(ab_dag).sum();
      const Complex b_iha = Complex(0.0, steps[l].dt * s.factor(p.wiring.channels[m])) * tr_bha;
      out.gradient(static_cast<Eigen::Index>(m), col) += -2.0 * std::real(b_iha * a_b);
    }
    back = slices[l].adjoint() * back;
  }
  return out;
}

std::vector<SampleEval> evaluate_all(const ControlProblem& p, const std::vector<SliceStep>& steps,
                                     const ControlField& u,
                                     const std::vector<UncertaintySample>& samples,
                                     bool with_gradient, std::size_t workers) {
  std::vector<SampleEval> out(samples.size());
  const std::size_t n_workers = std::clamp<std::size_t>(workers, 1, samples.size());
  if (n_workers == 1) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      out[i] = evaluate_sample(p, steps, u, samples[i], with_gradient);
    }
    return out;
  }
  // Each worker owns a contiguous slot range; reduction happens afterwards in list order.
  std::vector<std::exception_ptr> errors(n_workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    const std::size_t chunk = (samples.size() + n_workers - 1) / n_workers;
    for (std::size_t w = 0; w < n_workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          const std::size_t lo = w * chunk;
          const std::size_t hi = std::min(samples.size(), lo + chunk);
          for (std::size_t i = lo; i < hi; ++i) {
            out[i] = evaluate_sample(p, steps, u, samples[i], with_gradient);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

RealMatrix mean_gradient(const std::vector<SampleEval>& evals) {
  RealMatrix sum = evals.front().gradient;
  for (std::size_t i = 1; i < evals.size(); ++i) sum += evals[i].gradient;
  return sum / static_cast<double>(evals.size());
}

double mean_fidelity(const std::vector<SampleEval>& evals) {
  double sum = 0.0;
  for (const auto& e : evals) sum += e.fidelity;
  return sum / static_cast<double>(evals.size());
}

void require_samples(const ControlProblem& p, const std::vector<UncertaintySample>& samples) {
  if (samples.empty()) throw Error(ErrorKind::InvalidConfig, "sample list is empty");
  for (const auto& s : samples) check_sample(p, s);
}

}  // namespace

void TrainConfig::validate() const {
  if (!(step_size > 0.0)) throw Error(ErrorKind::InvalidConfig, "step size must be positive");
  if (log_stride < 1) throw Error(ErrorKind::InvalidConfig, "log stride must be >= 1");
  if (plateau_tol < 0.0) throw Error(ErrorKind::InvalidConfig, "plateau tolerance must be >= 0");
}

Chains forward_backward(const std::vector<ComplexMatrix>& slices, const ComplexMatrix& final,
                        const ComplexMatrix& target) {
  if (slices.empty()) throw Error(ErrorKind::InvalidConfig, "slice list is empty");
  const Eigen::Index d = target.rows();
  for (const auto& u : {final, target}) {
    if (u.rows() != d || u.cols() != d) {
      throw Error(ErrorKind::DimMismatch, "forward_backward: dimension mismatch");
    }
  }
  for (const auto& u : slices) {
    if (u.rows() != d || u.cols() != d) {
      throw Error(ErrorKind::DimMismatch, "forward_backward: dimension mismatch");
    }
    if (!is_unitary(u)) throw Error(ErrorKind::NotUnitary, "forward_backward: slice not unitary");
  }

  const std::size_t count = slices.size();
  Chains c;
  c.forward.resize(count);
  c.backward.resize(count);
  ComplexMatrix acc = identity(d);
  for (std::size_t l = 0; l < count; ++l) {
    acc = slices[l] * acc;
    c.forward[l] = acc;
  }
  ComplexMatrix back = target;
  for (std::size_t l = count; l-- > 0;) {
    c.backward[l] = back;
    back = slices[l].adjoint() * back;
  }
  return c;
}

RealMatrix sample_gradient(const ControlProblem& p, const ControlField& u,
                           const UncertaintySample& s) {
  check_field_shape(p, u);
  check_sample(p, s);
  return evaluate_sample(p, slice_steps(p), u, s, true).gradient;
}

RealMatrix averaged_gradient(const ControlProblem& p, const ControlField& u,
                             const std::vector<UncertaintySample>& samples,
                             std::size_t workers) {
  check_field_shape(p, u);
  require_samples(p, samples);
  return mean_gradient(evaluate_all(p, slice_steps(p), u, samples, true, workers));
}

double average_fidelity(const ControlProblem& p, const ControlField& u,
                        const std::vector<UncertaintySample>& samples) {
  check_field_shape(p, u);
  require_samples(p, samples);
  return mean_fidelity(evaluate_all(p, slice_steps(p), u, samples, false, 1));
}

TrainResult train(const ControlProblem& p, const std::vector<UncertaintySample>& samples,
                  const TrainConfig& cfg) {
  p.validate();
  return train(p, initial_field(p), samples, cfg);
}

TrainResult train(const ControlProblem& p, ControlField seed,
                  const std::vector<UncertaintySample>& samples, const TrainConfig& cfg) {
  p.validate();
  cfg.validate();
  check_field_shape(p, seed);
  require_samples(p, samples);
  const auto start = std::chrono::steady_clock::now();

  TrainResult result;
  result.learned = std::move(seed);
  result.learned.problem_id = p.id;
  clamp_to_bounds(p, result.learned);

  const auto steps = slice_steps(p);
  double best = -std::numeric_limits<double>::infinity();
  std::deque<double> window;  // best-so-far at the last plateau_window + 1 logged points

  for (std::size_t k = 0;; ++k) {
    const bool budget_spent = k >= cfg.max_iters;
    auto evals = evaluate_all(p, steps, result.learned, samples, !budget_spent, cfg.workers);
    const double avg = mean_fidelity(evals);
    if (!std::isfinite(avg)) {
      throw Error(ErrorKind::Diverged,
                  "average fidelity is not finite at iteration " + std::to_string(k));
    }
    best = std::max(best, avg);

    bool stop = budget_spent || (cfg.target_fidelity > 0.0 && avg >= cfg.target_fidelity);
    const bool logged = k % cfg.log_stride == 0;
    if (logged && cfg.plateau_window > 0) {
      window.push_back(best);
      if (window.size() > cfg.plateau_window + 1) window.pop_front();
      if (window.size() == cfg.plateau_window + 1 && window.back() - window.front() < cfg.plateau_tol) {
        stop = true;
      }
    }
    if (logged || stop) result.trace.push_back({k, avg, best});

    if (stop) {
      result.iterations_run = k;
      result.per_sample_final.reserve(evals.size());
      for (const auto& e : evals) result.per_sample_final.push_back(e.fidelity);
      break;
    }

    const double alpha = cfg.step_schedule ? cfg.step_schedule(k) : cfg.step_size;
    result.learned.amplitudes += alpha * mean_gradient(evals);
    clamp_to_bounds(p, result.learned);
  }

  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

TestReport test_controls(const ControlProblem& p, const ControlField& u,
                         const std::vector<UncertaintySample>& samples, std::size_t bins) {
  check_field_shape(p, u);
  require_samples(p, samples);
  if (bins < 1) throw Error(ErrorKind::InvalidConfig, "histogram needs at least one bin");

  TestReport r;
  const auto evals = evaluate_all(p, slice_steps(p), u, samples, false, 1);
  r.fidelities.reserve(evals.size());
  for (const auto& e : evals) r.fidelities.push_back(e.fidelity);

  const auto n = static_cast<double>(r.fidelities.size());
  const auto [lo_it, hi_it] = std::minmax_element(r.fidelities.begin(), r.fidelities.end());
  r.min = *lo_it;
  r.max = *hi_it;
  double sum = 0.0;
  for (double f : r.fidelities) sum += f;
  r.mean = std::clamp(sum / n, r.min, r.max);
  double sq = 0.0;
  for (double f : r.fidelities) sq += (f - r.mean) * (f - r.mean);
  r.std = std::sqrt(sq / n);

  double lo = r.min;
  double hi = 1.0;
  if (!(hi > lo)) hi = lo + 1e-12;
  const double width = (hi - lo) / static_cast<double>(bins);
  r.histogram.edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) r.histogram.edges[b] = lo + width * static_cast<double>(b);
  r.histogram.edges.back() = hi;
  r.histogram.counts.assign(bins, 0);
  for (double f : r.fidelities) {
    auto b = static_cast<std::ptrdiff_t>(std::floor((f - lo) / width));
    b = std::clamp<std::ptrdiff_t>(b, 0, static_cast<std::ptrdiff_t>(bins) - 1);
    ++r.histogram.counts[static_cast<std::size_t>(b)];
  }
  return r;
}

AmplitudeStats amplitude_stats(const ControlField& u) {
  if (u.amplitudes.size() == 0) return {};
  const RealMatrix a = u.amplitudes.cwiseAbs();
  return {a.maxCoeff(), a.mean()};
}

}  // namespace slc
