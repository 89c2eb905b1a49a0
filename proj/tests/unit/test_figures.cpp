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

#include "json.hpp"

#include "eitsim/errors.hpp"
#include "eitsim/figures.hpp"
#include "eitsim/scenario.hpp"

namespace eitsim {
namespace {

namespace fs = std::filesystem;

FigureOptions quick() {
  FigureOptions o;
  o.delta_grid = uniform_grid(-4.0, 4.0, 81);
  o.doppler_samples = 101;
  return o;
}

TEST(ReproduceFigures, WritesEveryCurveAndSummary) {
  const fs::path dir = fs::temp_directory_path() / "eitsim_test_figures";
  fs::remove_all(dir);
  const FigureReport r = reproduce_figures(dir, quick());
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.curves.size(), 8u);
  for (const auto& name : preset_names()) {
    EXPECT_TRUE(fs::exists(dir / (name + ".csv"))) << name;
    ASSERT_NE(r.find(name), nullptr);
    EXPECT_TRUE(r.find(name)->metrics.has_value());
  }
  int csv_files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    csv_files += e.path().extension() == ".csv";
  }
  EXPECT_EQ(csv_files, 8);

  std::ifstream in(r.summary_file);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["curves"].size(), 8u);
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_TRUE(j["curves"]["fig2"]["metrics"]["is_transparent"].get<bool>());
  EXPECT_TRUE(j["comparisons"].contains("fig4_direct_vs_effective"));
  ASSERT_TRUE(r.fig5a_dip_gap && r.fig5b_dip_gap);
  EXPECT_LT(*r.fig5a_dip_gap, *r.fig5b_dip_gap);
}

TEST(ReproduceFigures, NarrowGridFailuresAreAggregated) {
  const fs::path dir = fs::temp_directory_path() / "eitsim_test_figures_narrow";
  fs::remove_all(dir);
  FigureOptions o = quick();
  o.delta_grid = uniform_grid(-1.0, 1.0, 5);
  const FigureReport r = reproduce_figures(dir, o);
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.curves.size(), 8u);
  for (const auto& c : r.curves) {
    EXPECT_FALSE(c.ok());
    EXPECT_TRUE(fs::exists(dir / (c.name + ".csv")));
  }
  std::ifstream in(r.summary_file);
  EXPECT_EQ(nlohmann::json::parse(in)["failures"].size(), 8u);
}

TEST(ReproduceFigures, UnwritableDirectory) {
  const fs::path file = fs::temp_directory_path() / "eitsim_test_figures_file";
  std::ofstream(file) << "x";
  EXPECT_THROW(reproduce_figures(file / "sub", quick()), IoError);
}

}  // namespace
}  // namespace eitsim
