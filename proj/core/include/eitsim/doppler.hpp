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

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "eitsim/model.hpp"

namespace eitsim {

namespace constants {
inline constexpr double kBoltzmann = 1.380649e-23;        // J/K
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kRb87MassAmu = 86.909180527;
inline constexpr double kRb87D2Wavelength = 780.241209686e-9;  // m
}  // namespace constants

/// Thermal Maxwell-Boltzmann frequency-shift distribution, SI inputs.
struct DopplerConfig {
  double temperature = 320.0;  // K
  double mass = constants::kRb87MassAmu * constants::kAtomicMassUnit;  // kg
  double wavelength0 = constants::kRb87D2Wavelength;                   // m
  int n_samples = 801;
  double cutoff_sigmas = 4.0;
  /// Gamma3 expressed in Hz; converts the shift width into Gamma3 units.
  double gamma3_hz = 6.0e6;

  /// Throws ConfigError naming the offending "doppler.<field>".
  void validate() const;
};

struct VelocityClass {
  double shift = 0.0;   // Gamma3 units
  double weight = 0.0;  // dimensionless, grid weights sum to 1
};

/// Standard deviation sqrt(kT/m)/lambda0 of the shift distribution, in Hz.
double doppler_sigma_hz(const DopplerConfig& config);

/// doppler_sigma_hz in units of Gamma3.
double doppler_sigma(const DopplerConfig& config);

/// Uniform shifts over +-cutoff_sigmas * sigma with Gaussian weights,
/// normalised to unit sum.
std::vector<VelocityClass> velocity_grid(const DopplerConfig& config);

/// Sum of the raw (un-normalised) Gaussian weights times the grid spacing,
/// divided by sigma sqrt(2 pi): the captured fraction of the distribution.
double raw_weight_mass(const DopplerConfig& config);

using ShiftedSusceptibility = std::function<Complex(double shift)>;

/// sum_i w_i chi(shift_i), accumulated in grid order. Solver errors are
/// rethrown with the offending shift in the message (same exception type).
Complex doppler_average(const ShiftedSusceptibility& chi_at_shift,
                        std::span<const VelocityClass> grid);

}  // namespace eitsim
