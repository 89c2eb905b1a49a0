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

// Flat key-path configuration. A config file holds one `key = value` per
// line; `#` starts a comment. The same keys are accepted by `--set key=value`
// on the command line. Frequencies and rates are in Gamma3 units; doppler.*
// values are SI.
//
//   preset                  base preset applied before any other key
//   name                    scenario name
//   atom.omega43 atom.gamma31 atom.gamma32 atom.gamma41 atom.gamma42
//   atom.gamma3_deph atom.gamma4_deph atom.gamma2_deph
//   atom.dipole_signs.s31 .s41 .s32 .s42        (+1 / -1)
//   fields.omega_p3 fields.omega_p4 fields.omega_c3 fields.omega_c4
//   fields.delta_c
//   fields.probe fields.coupling   amplitudes spread with the dipole signs
//   exchange.model                 none | direct | effective
//   exchange.rate
//   doppler.enabled                true | false
//   doppler.temperature [K] doppler.mass [kg] doppler.wavelength0 [m]
//   doppler.n_samples doppler.cutoff_sigmas doppler.gamma3_hz [Hz]
//   grid.min grid.max grid.count   uniform delta grid
//   grid.values                    comma-separated explicit delta grid

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eitsim/scenario.hpp"

namespace eitsim {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_output_format(std::string_view text);
const char* to_string(OutputFormat format);

struct RunConfig {
  Scenario scenario;
  std::filesystem::path output;
  OutputFormat format = OutputFormat::kCsv;
  unsigned workers = 1;
};

/// Inputs of `eitsim run` before resolution.
struct RunRequest {
  std::optional<std::string> preset;
  std::optional<std::filesystem::path> config_path;
  std::vector<std::string> overrides;  // "key=value"
  std::optional<std::string> grid;     // "min:max:count"
  std::filesystem::path output;
  std::optional<std::string> format;   // csv | json, else from extension
  unsigned workers = 1;
};

using KeyValue = std::pair<std::string, std::string>;

/// Splits a config stream into key/value pairs in file order. Throws
/// ConfigError for malformed lines.
std::vector<KeyValue> parse_key_values(std::istream& in);

/// "key=value" -> pair. Throws ConfigError.
KeyValue parse_override(std::string_view text);

/// Applies one setting. Throws ConfigError naming `key` for unknown keys and
/// for values that do not parse.
void apply_setting(Scenario& scenario, std::string_view key,
                   std::string_view value);

/// Starts from `preset` (when present, default fig2), then applies every
/// other key in order and validates the result.
Scenario scenario_from_key_values(const std::vector<KeyValue>& entries);

/// Reads a config file. Throws IoError when it cannot be opened.
Scenario load_scenario_file(const std::filesystem::path& path);

/// Canonical config text for a scenario; loading it reproduces the scenario.
std::string serialize_scenario(const Scenario& scenario);

/// Same content as serialize_scenario, as ordered key/value pairs.
std::vector<KeyValue> scenario_key_values(const Scenario& scenario);

/// "min:max:count" -> uniform grid. Throws ConfigError on key "grid".
std::vector<double> parse_grid_spec(std::string_view spec);

/// Resolves and validates a run request. Exactly one of preset or config
/// path must be supplied.
RunConfig resolve_run_config(const RunRequest& request);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double value);

}  // namespace eitsim
