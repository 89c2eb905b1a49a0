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

#include "eitsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "eitsim/errors.hpp"

namespace eitsim {

namespace {

constexpr double kWindowInner = 1.0;
constexpr double kWindowOuter = 3.0;

}  // namespace

EitMetrics eit_metrics(const Spectrum& spectrum) {
  const auto& pts = spectrum.points;
  if (pts.empty() || pts.front().delta > -kWindowOuter ||
      pts.back().delta < kWindowOuter) {
    throw GridTooNarrow("eit_metrics: grid must span |delta| <= 3");
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  double left_base = nan, right_base = nan;
  double left_peak = nan, right_peak = nan;
  std::size_t center = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = pts[i].delta;
    const double im = pts[i].im_chi;
    if (std::abs(d) < std::abs(pts[center].delta)) center = i;
    const double ad = std::abs(d);
    if (ad >= kWindowInner && ad <= kWindowOuter) {
      double& base = d < 0 ? left_base : right_base;
      base = std::isnan(base) ? im : std::max(base, im);
    }
    if (ad > 0.0 && ad <= kWindowOuter) {
      double& peak = d < 0 ? left_peak : right_peak;
      peak = std::isnan(peak) ? im : std::max(peak, im);
    }
  }
  if (std::isnan(left_base) || std::isnan(right_base)) {
    throw GridTooNarrow(
        "eit_metrics: no grid points in 1 <= |delta| <= 3 on one side");
  }

  EitMetrics m;
  m.baseline = std::max(left_base, right_base);
  m.center_delta = pts[center].delta;
  m.dip_depth = pts[center].im_chi / m.baseline;
  m.is_transparent = m.dip_depth < 1.0;
  m.left_peak = left_peak;
  m.right_peak = right_peak;
  m.peak_asymmetry = std::max(left_peak, right_peak) /
                     std::min(left_peak, right_peak);
  return m;
}

SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) {
    throw GridMismatch("compare_spectra: spectra have different lengths");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.points[i].delta != b.points[i].delta) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "compare_spectra: grids differ at index " << i << " ("
          << a.points[i].delta << " vs " << b.points[i].delta << ")";
      throw GridMismatch(msg.str());
    }
  }

  SpectrumComparison c;
  const std::size_t n = a.size();
  if (n == 0) return c;

  double max_diff = 0.0, scale = 0.0, mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a.points[i].im_chi, y = b.points[i].im_chi;
    max_diff = std::max(max_diff, std::abs(x - y));
    scale = std::max({scale, std::abs(x), std::abs(y)});
    mean_a += x;
    mean_b += y;
  }
  mean_a /= n;
  mean_b /= n;
  c.linf_relative = scale > 0.0 ? max_diff / scale : 0.0;

  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a.points[i].im_chi - mean_a;
    const double y = b.points[i].im_chi - mean_b;
    sab += x * y;
    saa += x * x;
    sbb += y * y;
  }
  if (saa == 0.0 || sbb == 0.0) {
    c.correlation = max_diff == 0.0 ? 1.0 : 0.0;
  } else {
    c.correlation = sab / std::sqrt(saa * sbb);
  }
  return c;
}

std::vector<std::size_t> local_maxima(const Spectrum& spectrum, double limit) {
  std::vector<std::size_t> out;
  const auto& p = spectrum.points;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (std::abs(p[i].delta) > limit) continue;
    if (p[i].im_chi > p[i - 1].im_chi && p[i].im_chi > p[i + 1].im_chi) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace eitsim
