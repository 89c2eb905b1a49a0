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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eitsim/metrics.hpp"
#include "eitsim/scenario.hpp"

namespace eitsim {

struct CurveResult {
  std::string name;
  std::filesystem::path file;  // empty when the curve failed
  std::optional<EitMetrics> metrics;
  std::string error;

  bool ok() const noexcept { return error.empty(); }
};

struct FigureReport {
  std::vector<CurveResult> curves;
  /// |dip_depth(with decay) - dip_depth(without decay)| per fig5 panel.
  std::optional<double> fig5a_dip_gap;
  std::optional<double> fig5b_dip_gap;
  std::optional<SpectrumComparison> fig4_comparison;
  std::filesystem::path summary_file;

  bool ok() const;
  const CurveResult* find(const std::string& name) const;
};

struct FigureOptions {
  SweepOptions sweep;
  /// Applied to every curve when set (smoke runs and tests).
  std::optional<std::vector<double>> delta_grid;
  std::optional<int> doppler_samples;
};

/// Runs every preset, writes `<preset>.csv` per curve and `summary.json`
/// with the EIT metrics. A failing curve is recorded in the report and the
/// summary; the remaining curves still run. Throws IoError only when the
/// output directory cannot be created or the summary cannot be written.
FigureReport reproduce_figures(const std::filesystem::path& out_dir,
                               const FigureOptions& options = {});

}  // namespace eitsim
