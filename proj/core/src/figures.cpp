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

#include "eitsim/figures.hpp"

#include <cmath>

#include "json.hpp"

#include "eitsim/errors.hpp"
#include "eitsim/export.hpp"

namespace eitsim {

namespace {

nlohmann::ordered_json metrics_json(const EitMetrics& m) {
  return {
      {"dip_depth", m.dip_depth},         {"is_transparent", m.is_transparent},
      {"peak_asymmetry", m.peak_asymmetry}, {"baseline", m.baseline},
      {"center_delta", m.center_delta},   {"left_peak", m.left_peak},
      {"right_peak", m.right_peak},
  };
}

std::optional<double> dip_gap(const FigureReport& r, const std::string& a,
                              const std::string& b) {
  const auto* x = r.find(a);
  const auto* y = r.find(b);
  if (!x || !y || !x->metrics || !y->metrics) return std::nullopt;
  return std::abs(x->metrics->dip_depth - y->metrics->dip_depth);
}

}  // namespace

bool FigureReport::ok() const {
  for (const auto& c : curves) {
    if (!c.ok()) return false;
  }
  return true;
}

const CurveResult* FigureReport::find(const std::string& name) const {
  for (const auto& c : curves) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

FigureReport reproduce_figures(const std::filesystem::path& out_dir,
                               const FigureOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) {
    throw IoError("cannot create output directory " + out_dir.string());
  }

  FigureReport report;
  std::vector<Spectrum> spectra;
  for (const auto& name : preset_names()) {
    CurveResult curve;
    curve.name = name;
    try {
      Scenario s = preset(name);
      if (options.delta_grid) s.delta_grid = *options.delta_grid;
      if (options.doppler_samples && s.doppler) {
        s.doppler->n_samples = *options.doppler_samples;
      }
      const Spectrum spectrum = run_scenario(s, options.sweep);
      const auto path = out_dir / (name + ".csv");
      export_spectrum(spectrum, s, OutputFormat::kCsv, path);
      curve.file = path;
      try {
        curve.metrics = eit_metrics(spectrum);
      } catch (const GridTooNarrow& e) {
        curve.error = e.what();
      }
      if (name == "fig4_direct" || name == "fig4_effective") {
        spectra.push_back(spectrum);
      }
    } catch (const Error& e) {
      curve.error = e.what();
    }
    report.curves.push_back(std::move(curve));
  }

  report.fig5a_dip_gap = dip_gap(report, "fig5a", "fig5a_decay");
  report.fig5b_dip_gap = dip_gap(report, "fig5b", "fig5b_decay");
  if (spectra.size() == 2) {
    try {
      report.fig4_comparison = compare_spectra(spectra[0], spectra[1]);
    } catch (const GridMismatch&) {
    }
  }

  nlohmann::ordered_json summary;
  summary["code_version"] = code_version();
  summary["timestamp"] = utc_timestamp();
  auto curves = nlohmann::ordered_json::object();
  auto failures = nlohmann::ordered_json::array();
  for (const auto& c : report.curves) {
    nlohmann::ordered_json entry;
    entry["description"] = preset_description(c.name);
    entry["file"] = c.file.empty() ? "" : c.file.filename().string();
    if (c.metrics) entry["metrics"] = metrics_json(*c.metrics);
    if (!c.ok()) {
      entry["error"] = c.error;
      failures.push_back({{"curve", c.name}, {"error", c.error}});
    }
    curves[c.name] = std::move(entry);
  }
  summary["curves"] = std::move(curves);
  auto comparisons = nlohmann::ordered_json::object();
  if (report.fig4_comparison) {
    comparisons["fig4_direct_vs_effective"] = {
        {"linf_relative", report.fig4_comparison->linf_relative},
        {"correlation", report.fig4_comparison->correlation},
    };
  }
  if (report.fig5a_dip_gap) comparisons["fig5a_dip_gap"] = *report.fig5a_dip_gap;
  if (report.fig5b_dip_gap) comparisons["fig5b_dip_gap"] = *report.fig5b_dip_gap;
  summary["comparisons"] = std::move(comparisons);
  summary["failures"] = std::move(failures);

  report.summary_file = out_dir / "summary.json";
  write_file_atomically(report.summary_file, summary.dump(2) + "\n");
  return report;
}

}  // namespace eitsim
