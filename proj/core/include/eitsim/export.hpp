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
#include <iosfwd>
#include <string>

#include "eitsim/config.hpp"
#include "eitsim/scenario.hpp"

namespace eitsim {

/// Library version string written into JSON metadata.
const char* code_version();

/// Header `delta,re_chi,im_chi`, one row per point, 17 significant digits.
void write_csv(const Spectrum& spectrum, std::ostream& out);
std::string to_csv(const Spectrum& spectrum);

/// Parses the CSV produced by write_csv. Throws IoError on malformed input.
Spectrum read_csv(std::istream& in);

/// {"metadata": {scenario, code_version, timestamp}, "points": [...]} where
/// scenario echoes the canonical config keys. An empty timestamp is replaced
/// by the current UTC time.
std::string to_json(const Spectrum& spectrum, const Scenario& scenario,
                    const std::string& timestamp = {});
Spectrum read_json(std::istream& in);

/// Writes to `<path>.tmp` and renames into place, so an interrupted export
/// never leaves a partial file. Throws IoError.
void export_spectrum(const Spectrum& spectrum, const Scenario& scenario,
                     OutputFormat format, const std::filesystem::path& path);

/// Atomic text write used by the exporters.
void write_file_atomically(const std::filesystem::path& path,
                           const std::string& contents);

/// ISO-8601 UTC timestamp, second resolution.
std::string utc_timestamp();

}  // namespace eitsim
