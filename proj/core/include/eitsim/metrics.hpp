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

#include <vector>

#include "eitsim/scenario.hpp"

namespace eitsim {

struct EitMetrics {
  /// Im chi at the grid point nearest delta = 0 over the baseline.
  double dip_depth = 0.0;
  bool is_transparent = false;  // dip_depth < 1
  /// Larger over smaller of the Im chi maxima on the two sides of
  /// delta = 0, within |delta| <= 3.
  double peak_asymmetry = 1.0;
  /// max Im chi over 1 <= |delta| <= 3.
  double baseline = 0.0;
  double center_delta = 0.0;
  double left_peak = 0.0;
  double right_peak = 0.0;
};

/// Throws GridTooNarrow unless the grid covers [-3, 3] with points in both
/// baseline windows.
EitMetrics eit_metrics(const Spectrum& spectrum);

struct SpectrumComparison {
  /// max |a - b| / max(max |a|, max |b|) over Im chi.
  double linf_relative = 0.0;
  /// Pearson correlation of the two Im chi series.
  double correlation = 1.0;
};

/// Throws GridMismatch when the delta grids differ.
SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b);

/// Indices of strict interior local maxima of Im chi with |delta| <= limit.
std::vector<std::size_t> local_maxima(const Spectrum& spectrum, double limit);

}  // namespace eitsim
