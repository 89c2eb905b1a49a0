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

#include <atomic>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eitsim/doppler.hpp"
#include "eitsim/model.hpp"

namespace eitsim {

/// One spectrum computation: delta = delta_p - delta_c is scanned over
/// delta_grid with delta_c fixed by fields_template.
struct Scenario {
  std::string name;
  AtomParams atom;
  FieldParams fields_template;  // delta_p is overwritten per scan point
  ExchangeModel exchange;
  std::optional<DopplerConfig> doppler;
  std::vector<double> delta_grid;

  /// Checks every parameter block and that delta_grid is non-empty and
  /// strictly increasing. Throws ConfigError.
  void validate() const;
};

struct SpectrumPoint {
  double delta = 0.0;
  double re_chi = 0.0;
  double im_chi = 0.0;

  bool operator==(const SpectrumPoint&) const = default;
};

struct Spectrum {
  std::vector<SpectrumPoint> points;

  std::size_t size() const noexcept { return points.size(); }
  bool operator==(const Spectrum&) const = default;
};

struct SweepOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
  /// Polled between scan points; when set, the sweep throws Cancelled.
  const std::atomic<bool>* cancel = nullptr;
};

/// `count` uniformly spaced values over [min, max], endpoints included.
std::vector<double> uniform_grid(double min, double max, int count);

/// Susceptibility at one two-photon detuning, Doppler averaged when the
/// scenario carries a DopplerConfig. Each velocity class shifts delta_p and
/// delta_c by the same amount.
Complex scenario_chi(const Scenario& s, double delta);

/// Evaluates every grid point. Points are distributed over a worker pool but
/// each is computed by a single thread in a fixed order, so the output is
/// bit-identical for any worker count. Solver errors are rethrown with the
/// offending delta appended; with several failures the lowest delta wins.
Spectrum run_scenario(const Scenario& s, const SweepOptions& options = {});

inline constexpr int kDefaultGridCount = 601;
inline constexpr double kDefaultGridMin = -5.0;
inline constexpr double kDefaultGridMax = 5.0;
inline constexpr double kExchangeRate = 0.01;

/// Known names: fig2, fig3, fig4_direct, fig4_effective, fig5a, fig5a_decay,
/// fig5b, fig5b_decay.
const std::vector<std::string>& preset_names();
std::string preset_description(std::string_view name);

/// Throws UnknownPreset.
Scenario preset(std::string_view name);

}  // namespace eitsim
