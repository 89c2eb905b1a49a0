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

#include "eitsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "eitsim/errors.hpp"

namespace eitsim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(std::string(key),
                      "expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

long parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  long v = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(std::string(key),
                      "expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(std::string(key),
                    "expected true or false, got '" + std::string(text) + "'");
}

DopplerConfig& doppler_of(Scenario& s) {
  if (!s.doppler) s.doppler = DopplerConfig{};
  return *s.doppler;
}

using DoubleField = std::function<double&(Scenario&)>;

const std::vector<std::pair<std::string_view, DoubleField>>& double_fields() {
  static const std::vector<std::pair<std::string_view, DoubleField>> fields = {
      {"atom.omega43", [](Scenario& s) -> double& { return s.atom.omega43; }},
      {"atom.gamma31", [](Scenario& s) -> double& { return s.atom.gamma31; }},
      {"atom.gamma32", [](Scenario& s) -> double& { return s.atom.gamma32; }},
      {"atom.gamma41", [](Scenario& s) -> double& { return s.atom.gamma41; }},
      {"atom.gamma42", [](Scenario& s) -> double& { return s.atom.gamma42; }},
      {"atom.gamma3_deph", [](Scenario& s) -> double& { return s.atom.gamma3_deph; }},
      {"atom.gamma4_deph", [](Scenario& s) -> double& { return s.atom.gamma4_deph; }},
      {"atom.gamma2_deph", [](Scenario& s) -> double& { return s.atom.gamma2_deph; }},
      {"fields.omega_p3", [](Scenario& s) -> double& { return s.fields_template.omega_p3; }},
      {"fields.omega_p4", [](Scenario& s) -> double& { return s.fields_template.omega_p4; }},
      {"fields.omega_c3", [](Scenario& s) -> double& { return s.fields_template.omega_c3; }},
      {"fields.omega_c4", [](Scenario& s) -> double& { return s.fields_template.omega_c4; }},
      {"fields.delta_c", [](Scenario& s) -> double& { return s.fields_template.delta_c; }},
      {"exchange.rate", [](Scenario& s) -> double& { return s.exchange.rate; }},
      {"doppler.temperature", [](Scenario& s) -> double& { return doppler_of(s).temperature; }},
      {"doppler.mass", [](Scenario& s) -> double& { return doppler_of(s).mass; }},
      {"doppler.wavelength0", [](Scenario& s) -> double& { return doppler_of(s).wavelength0; }},
      {"doppler.cutoff_sigmas", [](Scenario& s) -> double& { return doppler_of(s).cutoff_sigmas; }},
      {"doppler.gamma3_hz", [](Scenario& s) -> double& { return doppler_of(s).gamma3_hz; }},
  };
  return fields;
}

int* sign_field(Scenario& s, std::string_view key) {
  auto& d = s.atom.dipole_signs;
  if (key == "atom.dipole_signs.s31") return &d.s31;
  if (key == "atom.dipole_signs.s41") return &d.s41;
  if (key == "atom.dipole_signs.s32") return &d.s32;
  if (key == "atom.dipole_signs.s42") return &d.s42;
  return nullptr;
}

void set_uniform_grid(Scenario& s, std::string_view key, double min, double max,
                      long count) {
  if (count < 1 || count > 10'000'000) {
    throw ConfigError(std::string(key), "grid count must be in [1, 1e7]");
  }
  try {
    s.delta_grid = uniform_grid(min, max, static_cast<int>(count));
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(key), e.what());
  }
}

bool is_uniform(const std::vector<double>& g) {
  if (g.size() < 2) return false;
  const auto u = uniform_grid(g.front(), g.back(), static_cast<int>(g.size()));
  return u == g;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::general, 17);
  return std::string(buf, ptr);
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ConfigError("format", "expected csv or json, got '" +
                                  std::string(text) + "'");
}

const char* to_string(OutputFormat format) {
  return format == OutputFormat::kJson ? "json" : "csv";
}

std::vector<KeyValue> parse_key_values(std::istream& in) {
  std::vector<KeyValue> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no),
                        "expected 'key = value'");
    }
    const auto key = trim(view.substr(0, eq));
    const auto value = trim(view.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no), "empty key");
    }
    out.emplace_back(std::string(key), std::string(value));
  }
  return out;
}

KeyValue parse_override(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || trim(text.substr(0, eq)).empty()) {
    throw ConfigError(std::string(text), "override must look like key=value");
  }
  return {std::string(trim(text.substr(0, eq))),
          std::string(trim(text.substr(eq + 1)))};
}

void apply_setting(Scenario& s, std::string_view key, std::string_view value) {
  for (const auto& [name, field] : double_fields()) {
    if (key == name) {
      field(s) = parse_double(key, value);
      return;
    }
  }
  if (int* sign = sign_field(s, key)) {
    *sign = static_cast<int>(parse_int(key, value));
    return;
  }
  if (key == "name") {
    s.name = std::string(trim(value));
    return;
  }
  if (key == "preset") {
    throw ConfigError("preset", "must be the first setting of a config");
  }
  if (key == "fields.probe" || key == "fields.coupling") {
    const double amp = parse_double(key, value);
    const auto& sg = s.atom.dipole_signs;
    auto& f = s.fields_template;
    if (key == "fields.probe") {
      f.omega_p3 = sg.s31 * amp;
      f.omega_p4 = sg.s41 * amp;
    } else {
      f.omega_c3 = sg.s32 * amp;
      f.omega_c4 = sg.s42 * amp;
    }
    return;
  }
  if (key == "exchange.model") {
    const auto v = trim(value);
    if (v == "none") s.exchange.kind = ExchangeModel::Kind::kNone;
    else if (v == "direct") s.exchange.kind = ExchangeModel::Kind::kDirect;
    else if (v == "effective") s.exchange.kind = ExchangeModel::Kind::kEffective;
    else
      throw ConfigError(std::string(key),
                        "expected none, direct or effective, got '" +
                            std::string(v) + "'");
    return;
  }
  if (key == "doppler.enabled") {
    if (parse_bool(key, value)) {
      doppler_of(s);
    } else {
      s.doppler.reset();
    }
    return;
  }
  if (key == "doppler.n_samples") {
    const long n = parse_int(key, value);
    if (n < 0 || n > 100'000'000) {
      throw ConfigError(std::string(key), "out of range");
    }
    doppler_of(s).n_samples = static_cast<int>(n);
    return;
  }
  if (key == "grid.min" || key == "grid.max" || key == "grid.count") {
    double min = s.delta_grid.empty() ? kDefaultGridMin : s.delta_grid.front();
    double max = s.delta_grid.empty() ? kDefaultGridMax : s.delta_grid.back();
    long count = s.delta_grid.empty() ? kDefaultGridCount
                                      : static_cast<long>(s.delta_grid.size());
    if (key == "grid.min") min = parse_double(key, value);
    if (key == "grid.max") max = parse_double(key, value);
    if (key == "grid.count") count = parse_int(key, value);
    set_uniform_grid(s, key, min, max, count);
    return;
  }
  if (key == "grid.values") {
    std::vector<double> values;
    std::string_view rest = value;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      values.push_back(parse_double(key, rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    s.delta_grid = std::move(values);
    return;
  }
  throw ConfigError(std::string(key), "unknown key");
}

Scenario scenario_from_key_values(const std::vector<KeyValue>& entries) {
  std::size_t first = 0;
  Scenario s;
  if (!entries.empty() && entries.front().first == "preset") {
    s = preset(entries.front().second);
    first = 1;
  } else {
    s = preset("fig2");
    s.name = "custom";
  }
  for (std::size_t i = first; i < entries.size(); ++i) {
    apply_setting(s, entries[i].first, entries[i].second);
  }
  s.validate();
  return s;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  return scenario_from_key_values(parse_key_values(in));
}

std::vector<KeyValue> scenario_key_values(const Scenario& s) {
  std::vector<KeyValue> kv;
  auto add = [&](std::string key, std::string value) {
    kv.emplace_back(std::move(key), std::move(value));
  };
  add("name", s.name);
  Scenario scratch = s;  // accessors take a mutable scenario
  for (const auto& [name, field] : double_fields()) {
    if (name.starts_with("doppler.")) continue;
    add(std::string(name), format_double(field(scratch)));
  }
  const auto& sg = s.atom.dipole_signs;
  add("atom.dipole_signs.s31", std::to_string(sg.s31));
  add("atom.dipole_signs.s41", std::to_string(sg.s41));
  add("atom.dipole_signs.s32", std::to_string(sg.s32));
  add("atom.dipole_signs.s42", std::to_string(sg.s42));
  add("exchange.model", to_string(s.exchange.kind));
  add("doppler.enabled", s.doppler ? "true" : "false");
  if (s.doppler) {
    const auto& d = *s.doppler;
    add("doppler.temperature", format_double(d.temperature));
    add("doppler.mass", format_double(d.mass));
    add("doppler.wavelength0", format_double(d.wavelength0));
    add("doppler.n_samples", std::to_string(d.n_samples));
    add("doppler.cutoff_sigmas", format_double(d.cutoff_sigmas));
    add("doppler.gamma3_hz", format_double(d.gamma3_hz));
  }
  if (is_uniform(s.delta_grid)) {
    add("grid.min", format_double(s.delta_grid.front()));
    add("grid.max", format_double(s.delta_grid.back()));
    add("grid.count", std::to_string(s.delta_grid.size()));
  } else {
    std::string values;
    for (std::size_t i = 0; i < s.delta_grid.size(); ++i) {
      if (i) values += ',';
      values += format_double(s.delta_grid[i]);
    }
    add("grid.values", values);
  }
  return kv;
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  for (const auto& [key, value] : scenario_key_values(s)) {
    out << key << " = " << value << '\n';
  }
  return out.str();
}

std::vector<double> parse_grid_spec(std::string_view spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
    throw ConfigError("grid", "expected min:max:count, got '" +
                                  std::string(spec) + "'");
  }
  const double min = parse_double("grid", spec.substr(0, c1));
  const double max = parse_double("grid", spec.substr(c1 + 1, c2 - c1 - 1));
  const long count = parse_int("grid", spec.substr(c2 + 1));
  Scenario tmp;
  set_uniform_grid(tmp, "grid", min, max, count);
  return tmp.delta_grid;
}

RunConfig resolve_run_config(const RunRequest& req) {
  if (req.preset.has_value() == req.config_path.has_value()) {
    throw ConfigError("preset", "give exactly one of --preset or --config");
  }
  RunConfig cfg;
  cfg.scenario = req.preset ? preset(*req.preset)
                            : load_scenario_file(*req.config_path);
  if (req.grid) cfg.scenario.delta_grid = parse_grid_spec(*req.grid);
  for (const auto& text : req.overrides) {
    const auto [key, value] = parse_override(text);
    apply_setting(cfg.scenario, key, value);
  }
  cfg.scenario.validate();

  if (req.output.empty()) throw ConfigError("out", "output path is required");
  cfg.output = req.output;
  if (req.format) {
    cfg.format = parse_output_format(*req.format);
  } else {
    cfg.format = req.output.extension() == ".json" ? OutputFormat::kJson
                                                   : OutputFormat::kCsv;
  }
  if (req.workers == 0) throw ConfigError("workers", "must be >= 1");
  cfg.workers = req.workers;

  const auto dir = std::filesystem::absolute(cfg.output).parent_path();
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw ConfigError("out", "output directory " + dir.string() +
                                 " does not exist");
  }
  return cfg;
}

}  // namespace eitsim
