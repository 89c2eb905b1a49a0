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

#include "eitsim/export.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "eitsim/errors.hpp"

#ifndef EITSIM_VERSION
#define EITSIM_VERSION "0.0.0"
#endif

namespace eitsim {

namespace {

double parse_field(std::string_view text, int line_no) {
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw IoError("csv line " + std::to_string(line_no) + ": bad number '" +
                  std::string(text) + "'");
  }
  return v;
}

}  // namespace

const char* code_version() { return EITSIM_VERSION; }

void write_csv(const Spectrum& spectrum, std::ostream& out) {
  out << "delta,re_chi,im_chi\n";
  for (const auto& p : spectrum.points) {
    out << format_double(p.delta) << ',' << format_double(p.re_chi) << ','
        << format_double(p.im_chi) << '\n';
  }
}

std::string to_csv(const Spectrum& spectrum) {
  std::ostringstream out;
  write_csv(spectrum, out);
  return out.str();
}

Spectrum read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "delta,re_chi,im_chi") {
    throw IoError("csv: missing 'delta,re_chi,im_chi' header");
  }
  Spectrum s;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw IoError("csv line " + std::to_string(line_no) +
                    ": expected three columns");
    }
    const std::string_view view(line);
    s.points.push_back({parse_field(view.substr(0, c1), line_no),
                        parse_field(view.substr(c1 + 1, c2 - c1 - 1), line_no),
                        parse_field(view.substr(c2 + 1), line_no)});
  }
  return s;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string to_json(const Spectrum& spectrum, const Scenario& scenario,
                    const std::string& timestamp) {
  nlohmann::ordered_json scenario_echo = nlohmann::ordered_json::object();
  for (const auto& [key, value] : scenario_key_values(scenario)) {
    scenario_echo[key] = value;
  }
  nlohmann::ordered_json doc;
  doc["metadata"] = {
      {"scenario", scenario_echo},
      {"code_version", code_version()},
      {"timestamp", timestamp.empty() ? utc_timestamp() : timestamp},
  };
  auto points = nlohmann::ordered_json::array();
  for (const auto& p : spectrum.points) {
    points.push_back({{"delta", p.delta}, {"re_chi", p.re_chi},
                      {"im_chi", p.im_chi}});
  }
  doc["points"] = std::move(points);
  return doc.dump(2) + "\n";
}

Spectrum read_json(std::istream& in) {
  try {
    const auto doc = nlohmann::json::parse(in);
    Spectrum s;
    for (const auto& p : doc.at("points")) {
      s.points.push_back({p.at("delta").get<double>(),
                          p.at("re_chi").get<double>(),
                          p.at("im_chi").get<double>()});
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("json: ") + e.what());
  }
}

void write_file_atomically(const std::filesystem::path& path,
                           const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

void export_spectrum(const Spectrum& spectrum, const Scenario& scenario,
                     OutputFormat format, const std::filesystem::path& path) {
  write_file_atomically(path, format == OutputFormat::kJson
                                  ? to_json(spectrum, scenario)
                                  : to_csv(spectrum));
}

}  // namespace eitsim
