// Copyright 2026 The eitsim Authors
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

#include "eitsim/doppler.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "eitsim/errors.hpp"
#include "rethrow.hpp"

namespace eitsim {

namespace {

void require_positive(const char* key, double v) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw ConfigError(key, "must be > 0, got " + std::to_string(v));
  }
}

}  // namespace

void DopplerConfig::validate() const {
  require_positive("doppler.temperature", temperature);
  require_positive("doppler.mass", mass);
  require_positive("doppler.wavelength0", wavelength0);
  require_positive("doppler.gamma3_hz", gamma3_hz);
  if (n_samples < 3 || n_samples % 2 == 0) {
    throw ConfigError("doppler.n_samples",
                      "must be odd and >= 3, got " + std::to_string(n_samples));
  }
  if (!std::isfinite(cutoff_sigmas) || cutoff_sigmas < 3.0) {
    throw ConfigError("doppler.cutoff_sigmas",
                      "must be >= 3, got " + std::to_string(cutoff_sigmas));
  }
}

double doppler_sigma_hz(const DopplerConfig& c) {
  return std::sqrt(constants::kBoltzmann * c.temperature / c.mass) /
         c.wavelength0;
}

double doppler_sigma(const DopplerConfig& c) {
  return doppler_sigma_hz(c) / c.gamma3_hz;
}

std::vector<VelocityClass> velocity_grid(const DopplerConfig& c) {
  c.validate();
  const double sigma = doppler_sigma(c);
  const double half_width = c.cutoff_sigmas * sigma;
  const int n = c.n_samples;
  const int mid = n / 2;
  const double step = half_width / mid;

  std::vector<VelocityClass> grid(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    // Symmetric by construction: shift(mid + k) == -shift(mid - k).
    const double shift = (i - mid) * step;
    const double x = shift / sigma;
    grid[i] = {shift, std::exp(-0.5 * x * x)};
    total += grid[i].weight;
  }
  for (auto& v : grid) v.weight /= total;
  return grid;
}

double raw_weight_mass(const DopplerConfig& c) {
  c.validate();
  const double sigma = doppler_sigma(c);
  const int mid = c.n_samples / 2;
  const double step = c.cutoff_sigmas * sigma / mid;
  double total = 0.0;
  for (int i = 0; i < c.n_samples; ++i) {
    const double x = (i - mid) * step / sigma;
    total += std::exp(-0.5 * x * x);
  }
  return total * step / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

Complex doppler_average(const ShiftedSusceptibility& chi_at_shift,
                        std::span<const VelocityClass> grid) {
  Complex sum = 0.0;
  for (const auto& v : grid) {
    try {
      sum += v.weight * chi_at_shift(v.shift);
    } catch (const SolverError&) {
      std::ostringstream ctx;
      ctx << "[velocity class shift = " << v.shift << "]";
      detail::rethrow_with_context(std::current_exception(), ctx.str());
    }
  }
  return sum;
}

}  // namespace eitsim
