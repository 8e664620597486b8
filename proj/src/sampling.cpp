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

#include "slc/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "slc/error.hpp"

namespace slc {

void UncertaintySpec::validate() const {
  for (const auto& p : params) {
    if (!(p.bound >= 0.0 && p.bound <= 1.0)) {
      throw Error(ErrorKind::InvalidConfig, "uncertainty bound must lie in [0, 1]");
    }
    if (p.grid_count < 1) throw Error(ErrorKind::InvalidConfig, "grid count must be >= 1");
  }
  if (test_count < 1) throw Error(ErrorKind::InvalidConfig, "test_count must be >= 1");
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double x = 0.0;
  double y = 0.0;
  double r2 = 0.0;
  do {
    x = 2.0 * uniform() - 1.0;
    y = 2.0 * uniform() - 1.0;
    r2 = x * x + y * y;
  } while (r2 >= 1.0 || r2 == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(r2) / r2);
  spare_ = y * scale;
  has_spare_ = true;
  return x * scale;
}

std::vector<UncertaintySample> training_grid(const UncertaintySpec& spec) {
  spec.validate();
  std::vector<std::vector<double>> axes;
  axes.reserve(spec.params.size());
  for (const auto& p : spec.params) {
    std::vector<double> axis(p.grid_count);
    const auto n = static_cast<long long>(p.grid_count);
    for (long long i = 1; i <= n; ++i) {
      // 1 - E + (2i - 1)E/N rewritten around the centre so symmetric points
      // get exactly negated offsets.
      axis[static_cast<std::size_t>(i - 1)] =
          1.0 + static_cast<double>(2 * i - 1 - n) * p.bound / static_cast<double>(n);
    }
    axes.push_back(std::move(axis));
  }

  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  std::vector<UncertaintySample> out;
  out.reserve(total);
  std::vector<std::size_t> idx(axes.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    UncertaintySample s;
    s.eps.reserve(axes.size());
    for (std::size_t k = 0; k < axes.size(); ++k) s.eps.push_back(axes[k][idx[k]]);
    out.push_back(std::move(s));
    // odometer increment, last parameter fastest
    for (std::size_t k = axes.size(); k-- > 0;) {
      if (++idx[k] < axes[k].size()) break;
      idx[k] = 0;
    }
  }
  return out;
}

std::vector<UncertaintySample> mc_uniform(const UncertaintySpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<UncertaintySample> out(spec.test_count);
  for (auto& s : out) {
    s.eps.reserve(spec.params.size());
    for (const auto& p : spec.params) {
      const double lo = 1.0 - p.bound;
      const double hi = 1.0 + p.bound;
      s.eps.push_back(std::clamp(lo + 2.0 * p.bound * rng.uniform(), lo, hi));
    }
  }
  return out;
}

std::vector<UncertaintySample> mc_truncated_gaussian(const UncertaintySpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<UncertaintySample> out(spec.test_count);
  for (auto& s : out) {
    s.eps.reserve(spec.params.size());
    for (const auto& p : spec.params) {
      if (p.bound == 0.0) {
        s.eps.push_back(1.0);
        continue;
      }
      const double sigma = p.bound / 3.0;
      double v = 0.0;
      do {
        v = 1.0 + sigma * rng.normal();
      } while (v < 1.0 - p.bound || v > 1.0 + p.bound);
      s.eps.push_back(v);
    }
  }
  return out;
}

std::vector<UncertaintySample> test_ensemble(const UncertaintySpec& spec) {
  switch (spec.test_distribution) {
    case TestDistribution::Uniform: return mc_uniform(spec);
    case TestDistribution::TruncatedGaussian: return mc_truncated_gaussian(spec);
  }
  throw Error(ErrorKind::InvalidConfig, "unknown test distribution");
}

}  // namespace slc
