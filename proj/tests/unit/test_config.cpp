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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "eitsim/config.hpp"
#include "eitsim/errors.hpp"

namespace eitsim {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "eitsim_test_config";
  fs::create_directories(dir);
  return dir;
}

std::string error_key(const std::function<void()>& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<no error>";
}

TEST(ParseKeyValues, CommentsAndWhitespace) {
  std::istringstream in(
      "# header\n"
      "preset = fig3\n"
      "\n"
      "  doppler.temperature=300   # warmer\n"
      "name = my run\n");
  const auto kv = parse_key_values(in);
  ASSERT_EQ(kv.size(), 3u);
  EXPECT_EQ(kv[0], (KeyValue{"preset", "fig3"}));
  EXPECT_EQ(kv[1], (KeyValue{"doppler.temperature", "300"}));
  EXPECT_EQ(kv[2], (KeyValue{"name", "my run"}));
}

TEST(ParseKeyValues, MalformedLine) {
  std::istringstream in("preset = fig2\nthis is not a setting\n");
  EXPECT_EQ(error_key([&] { parse_key_values(in); }), "line 2");
}

TEST(ApplySetting, Keys) {
  Scenario s = preset("fig2");
  apply_setting(s, "atom.gamma2_deph", "0.25");
  apply_setting(s, "fields.delta_c", "-1.5e-1");
  apply_setting(s, "exchange.model", "effective");
  apply_setting(s, "exchange.rate", "0.02");
  apply_setting(s, "doppler.n_samples", "101");
  apply_setting(s, "atom.dipole_signs.s42", "+1");
  apply_setting(s, "fields.coupling", "2");
  EXPECT_EQ(s.atom.gamma2_deph, 0.25);
  EXPECT_EQ(s.fields_template.delta_c, -0.15);
  EXPECT_EQ(s.exchange, ExchangeModel::Effective(0.02));
  ASSERT_TRUE(s.doppler.has_value());
  EXPECT_EQ(s.doppler->n_samples, 101);
  EXPECT_EQ(s.fields_template.omega_c3, 2.0);
  EXPECT_EQ(s.fields_template.omega_c4, 2.0);
  apply_setting(s, "doppler.enabled", "false");
  EXPECT_FALSE(s.doppler.has_value());
}

TEST(ApplySetting, GridKeys) {
  Scenario s = preset("fig2");
  apply_setting(s, "grid.count", "11");
  EXPECT_EQ(s.delta_grid.size(), 11u);
  EXPECT_EQ(s.delta_grid.front(), -5.0);
  apply_setting(s, "grid.min", "-2");
  EXPECT_EQ(s.delta_grid.front(), -2.0);
  EXPECT_EQ(s.delta_grid.back(), 5.0);
  apply_setting(s, "grid.values", "-1, 0.5,2");
  EXPECT_EQ(s.delta_grid, (std::vector<double>{-1.0, 0.5, 2.0}));
}

TEST(ApplySetting, Errors) {
  Scenario s = preset("fig2");
  EXPECT_EQ(error_key([&] { apply_setting(s, "atom.bogus", "1"); }), "atom.bogus");
  EXPECT_EQ(error_key([&] { apply_setting(s, "atom.gamma31", "abc"); }), "atom.gamma31");
  EXPECT_EQ(error_key([&] { apply_setting(s, "atom.gamma31", "1.0x"); }), "atom.gamma31");
  EXPECT_EQ(error_key([&] { apply_setting(s, "exchange.model", "magic"); }), "exchange.model");
  EXPECT_EQ(error_key([&] { apply_setting(s, "doppler.enabled", "maybe"); }), "doppler.enabled");
  EXPECT_EQ(error_key([&] { apply_setting(s, "grid.count", "0"); }), "grid.count");
  EXPECT_EQ(error_key([&] { apply_setting(s, "preset", "fig3"); }), "preset");
}

TEST(ScenarioFromKeyValues, ValidationNamesTheKey) {
  EXPECT_EQ(error_key([] {
              scenario_from_key_values({{"preset", "fig3"}, {"doppler.temperature", "-1"}});
            }),
            "doppler.temperature");
  EXPECT_EQ(error_key([] {
              scenario_from_key_values({{"atom.gamma41", "-0.5"}});
            }),
            "atom.gamma41");
  EXPECT_EQ(error_key([] { scenario_from_key_values({{"preset", "nope"}}); }), "preset");
  EXPECT_EQ(error_key([] {
              scenario_from_key_values({{"preset", "fig3"}, {"doppler.n_samples", "4"}});
            }),
            "doppler.n_samples");
}

TEST(ScenarioFromKeyValues, DefaultsToFig2) {
  const Scenario s = scenario_from_key_values({{"atom.omega43", "20"}});
  EXPECT_EQ(s.name, "custom");
  EXPECT_EQ(s.atom.omega43, 20.0);
  EXPECT_EQ(s.fields_template.omega_c4, -1.0);
}

void expect_same(const Scenario& a, const Scenario& b) {
  EXPECT_EQ(a.name, b.name);
  EXPECT_EQ(serialize_scenario(a), serialize_scenario(b));
  EXPECT_EQ(a.delta_grid, b.delta_grid);
  EXPECT_EQ(a.exchange, b.exchange);
  EXPECT_EQ(a.doppler.has_value(), b.doppler.has_value());
  if (a.doppler && b.doppler) {
    EXPECT_EQ(a.doppler->mass, b.doppler->mass);
    EXPECT_EQ(a.doppler->n_samples, b.doppler->n_samples);
  }
  EXPECT_EQ(a.atom.gamma42, b.atom.gamma42);
  EXPECT_EQ(a.fields_template.omega_p3, b.fields_template.omega_p3);
}

TEST(Serialize, RoundTripsEveryPreset) {
  for (const auto& name : preset_names()) {
    const Scenario s = preset(name);
    std::istringstream in(serialize_scenario(s));
    expect_same(scenario_from_key_values(parse_key_values(in)), s);
  }
}

TEST(Serialize, RoundTripsExplicitGridAndOddValues) {
  Scenario s = preset("fig4_effective");
  s.delta_grid = {-0.1, 1.0 / 3.0, 2.718281828459045};
  s.atom.gamma42 = 0.1 + 0.2;
  s.fields_template.omega_p3 = 1e-300;
  std::istringstream in(serialize_scenario(s));
  expect_same(scenario_from_key_values(parse_key_values(in)), s);
}

TEST(GridSpec, Parses) {
  const auto g = parse_grid_spec("-3:3:7");
  EXPECT_EQ(g, (std::vector<double>{-3, -2, -1, 0, 1, 2, 3}));
  EXPECT_EQ(error_key([] { parse_grid_spec("1:2"); }), "grid");
  EXPECT_EQ(error_key([] { parse_grid_spec("a:2:3"); }), "grid");
  EXPECT_EQ(error_key([] { parse_grid_spec("2:1:3"); }), "grid");
}

TEST(ResolveRunConfig, Preset) {
  RunRequest req;
  req.preset = "fig2";
  req.output = scratch_dir() / "spec.csv";
  const RunConfig cfg = resolve_run_config(req);
  EXPECT_EQ(cfg.scenario.name, "fig2");
  EXPECT_EQ(cfg.format, OutputFormat::kCsv);
  EXPECT_EQ(cfg.output, req.output);
}

TEST(ResolveRunConfig, Override) {
  RunRequest req;
  req.preset = "fig4_direct";
  req.overrides = {"exchange.rate=0.02"};
  req.output = scratch_dir() / "spec.json";
  const RunConfig cfg = resolve_run_config(req);
  EXPECT_EQ(cfg.scenario.exchange, ExchangeModel::Direct(0.02));
  EXPECT_EQ(cfg.format, OutputFormat::kJson);
}

TEST(ResolveRunConfig, GridThenOverrides) {
  RunRequest req;
  req.preset = "fig2";
  req.grid = "-1:1:5";
  req.overrides = {"grid.count=3"};
  req.format = "json";
  req.output = scratch_dir() / "x.csv";
  const RunConfig cfg = resolve_run_config(req);
  EXPECT_EQ(cfg.scenario.delta_grid, (std::vector<double>{-1, 0, 1}));
  EXPECT_EQ(cfg.format, OutputFormat::kJson);
}

TEST(ResolveRunConfig, ConfigFile) {
  const fs::path cfg_path = scratch_dir() / "warm.cfg";
  {
    std::ofstream out(cfg_path);
    out << "preset = fig3\ndoppler.temperature = 350\n";
  }
  RunRequest req;
  req.config_path = cfg_path;
  req.output = scratch_dir() / "warm.csv";
  const RunConfig cfg = resolve_run_config(req);
  EXPECT_EQ(cfg.scenario.doppler->temperature, 350.0);

  std::ofstream(cfg_path) << "preset = fig3\ndoppler.temperature = -1\n";
  EXPECT_EQ(error_key([&] { resolve_run_config(req); }), "doppler.temperature");
}

TEST(ResolveRunConfig, Errors) {
  RunRequest both;
  both.preset = "fig2";
  both.config_path = "x.cfg";
  both.output = "x.csv";
  EXPECT_EQ(error_key([&] { resolve_run_config(both); }), "preset");

  RunRequest missing_dir;
  missing_dir.preset = "fig2";
  missing_dir.output = scratch_dir() / "no" / "such" / "x.csv";
  EXPECT_EQ(error_key([&] { resolve_run_config(missing_dir); }), "out");

  RunRequest bad_format;
  bad_format.preset = "fig2";
  bad_format.format = "xml";
  bad_format.output = scratch_dir() / "x.csv";
  EXPECT_EQ(error_key([&] { resolve_run_config(bad_format); }), "format");

  RunRequest no_workers;
  no_workers.preset = "fig2";
  no_workers.workers = 0;
  no_workers.output = scratch_dir() / "x.csv";
  EXPECT_EQ(error_key([&] { resolve_run_config(no_workers); }), "workers");

  RunRequest bad_override;
  bad_override.preset = "fig2";
  bad_override.overrides = {"noequals"};
  bad_override.output = scratch_dir() / "x.csv";
  EXPECT_THROW(resolve_run_config(bad_override), ConfigError);

  RunRequest absent;
  absent.config_path = scratch_dir() / "absent.cfg";
  absent.output = scratch_dir() / "x.csv";
  EXPECT_THROW(resolve_run_config(absent), IoError);
}

TEST(FormatDouble, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(-5.0), "-5");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace eitsim
