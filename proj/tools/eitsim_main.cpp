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

// eitsim command-line front end.
//
//   eitsim presets
//   eitsim run (--preset NAME | --config FILE) --out PATH [--set key=value]...
//              [--grid min:max:count] [--format csv|json] [--workers N]
//   eitsim reproduce-figures --out DIR [--workers N]
//   eitsim validate
//
// Exit codes: 0 success, 2 configuration error, 3 solver error, 4 I/O error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eitsim/config.hpp"
#include "eitsim/errors.hpp"
#include "eitsim/export.hpp"
#include "eitsim/figures.hpp"
#include "eitsim/metrics.hpp"
#include "eitsim/scenario.hpp"
#include "eitsim/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

int cmd_presets() {
  for (const auto& name : eitsim::preset_names()) {
    std::printf("%-16s %s\n", name.c_str(),
                eitsim::preset_description(name).c_str());
  }
  return kExitOk;
}

int cmd_run(const eitsim::RunRequest& request) {
  const auto cfg = eitsim::resolve_run_config(request);
  eitsim::SweepOptions sweep;
  sweep.workers = cfg.workers;
  const auto spectrum = eitsim::run_scenario(cfg.scenario, sweep);
  eitsim::export_spectrum(spectrum, cfg.scenario, cfg.format, cfg.output);
  std::fprintf(stderr, "wrote %zu points to %s\n", spectrum.size(),
               cfg.output.string().c_str());
  try {
    const auto m = eitsim::eit_metrics(spectrum);
    std::fprintf(stderr,
                 "dip_depth=%.6g is_transparent=%s peak_asymmetry=%.6g\n",
                 m.dip_depth, m.is_transparent ? "true" : "false",
                 m.peak_asymmetry);
  } catch (const eitsim::GridTooNarrow&) {
    // metrics need |delta| <= 3 coverage; nothing to report otherwise
  }
  return kExitOk;
}

int cmd_reproduce(const std::string& out_dir, unsigned workers) {
  if (workers == 0) throw eitsim::ConfigError("workers", "must be >= 1");
  eitsim::FigureOptions options;
  options.sweep.workers = workers;
  const auto report = eitsim::reproduce_figures(out_dir, options);
  for (const auto& c : report.curves) {
    if (!c.ok()) {
      std::printf("%-16s FAILED: %s\n", c.name.c_str(), c.error.c_str());
    } else if (c.metrics) {
      std::printf("%-16s dip_depth=%-12.6g transparent=%-5s asymmetry=%.6g\n",
                  c.name.c_str(), c.metrics->dip_depth,
                  c.metrics->is_transparent ? "true" : "false",
                  c.metrics->peak_asymmetry);
    }
  }
  if (report.fig5a_dip_gap && report.fig5b_dip_gap) {
    std::printf("fig5 dip_depth gap: resonant %.6g, centred %.6g\n",
                *report.fig5a_dip_gap, *report.fig5b_dip_gap);
  }
  std::printf("summary: %s\n", report.summary_file.string().c_str());
  return report.ok() ? kExitOk : kExitSolver;
}

int cmd_validate() {
  bool all = true;
  for (const auto& check : eitsim::run_validation()) {
    std::printf("[%s] %-40s measured %.3e (tolerance %.1e)\n",
                check.passed ? "PASS" : "FAIL", check.name.c_str(),
                check.measured, check.tolerance);
    all = all && check.passed;
  }
  return all ? kExitOk : kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state EIT susceptibility spectra of a four-level atom"};
  app.require_subcommand(1);

  auto* presets = app.add_subcommand("presets", "List the built-in scenarios");

  eitsim::RunRequest run_req;
  std::string preset_name, config_path, grid, format;
  auto* run = app.add_subcommand("run", "Compute one spectrum");
  run->add_option("--preset", preset_name, "Built-in scenario name");
  run->add_option("--config", config_path, "key = value config file");
  run->add_option("--set", run_req.overrides, "Override key=value (repeatable)")
      ->take_all();
  run->add_option("--grid", grid, "Uniform delta grid min:max:count");
  run->add_option("--out", run_req.output, "Output file")->required();
  run->add_option("--format", format, "csv or json (default from extension)");
  run->add_option("--workers", run_req.workers, "Worker threads");

  std::string figures_out;
  unsigned figure_workers = 1;
  auto* figures = app.add_subcommand(
      "reproduce-figures", "Compute every preset and write CSVs + summary");
  figures->add_option("--out", figures_out, "Output directory")->required();
  figures->add_option("--workers", figure_workers, "Worker threads");

  auto* validate =
      app.add_subcommand("validate", "Run the analytical oracle cross-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (presets->parsed()) return cmd_presets();
    if (run->parsed()) {
      if (!preset_name.empty()) run_req.preset = preset_name;
      if (!config_path.empty()) run_req.config_path = config_path;
      if (!grid.empty()) run_req.grid = grid;
      if (!format.empty()) run_req.format = format;
      return cmd_run(run_req);
    }
    if (figures->parsed()) return cmd_reproduce(figures_out, figure_workers);
    if (validate->parsed()) return cmd_validate();
  } catch (const eitsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const eitsim::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const eitsim::Error& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitOk;
}
