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

#include <atomic>
#include <cmath>
#include <limits>

#include "eitsim/errors.hpp"
#include "eitsim/metrics.hpp"
#include "eitsim/scenario.hpp"

namespace eitsim {
namespace {

Scenario coarse(const std::string& name, int count = 61, int samples = 0) {
  Scenario s = preset(name);
  s.delta_grid = uniform_grid(-5.0, 5.0, count);
  if (samples > 0 && s.doppler) s.doppler->n_samples = samples;
  return s;
}

TEST(Presets, Catalogue) {
  const auto& names = preset_names();
  ASSERT_EQ(names.size(), 8u);
  for (const auto& n : names) {
    const Scenario s = preset(n);
    EXPECT_EQ(s.name, n);
    EXPECT_FALSE(preset_description(n).empty());
    EXPECT_EQ(s.delta_grid.size(), static_cast<std::size_t>(kDefaultGridCount));
    EXPECT_EQ(s.delta_grid.front(), -5.0);
    EXPECT_EQ(s.delta_grid.back(), 5.0);
    s.validate();
  }
  EXPECT_THROW(preset("fig6"), UnknownPreset);
}

TEST(Presets, NominalParameters) {
  const Scenario fig2 = preset("fig2");
  EXPECT_EQ(fig2.exchange, ExchangeModel::None());
  EXPECT_FALSE(fig2.doppler.has_value());
  EXPECT_EQ(fig2.atom.omega43, 26.0);
  EXPECT_EQ(fig2.fields_template.omega_p3, 0.001);
  EXPECT_EQ(fig2.fields_template.omega_p4, 0.001);
  EXPECT_EQ(fig2.fields_template.omega_c3, 1.0);
  EXPECT_EQ(fig2.fields_template.omega_c4, -1.0);
  EXPECT_EQ(fig2.fields_template.delta_c, 0.0);

  const Scenario fig3 = preset("fig3");
  ASSERT_TRUE(fig3.doppler.has_value());
  EXPECT_EQ(fig3.doppler->temperature, 320.0);
  EXPECT_EQ(fig3.exchange, ExchangeModel::None());

  EXPECT_EQ(preset("fig4_direct").exchange, ExchangeModel::Direct(0.01));
  EXPECT_EQ(preset("fig4_effective").exchange, ExchangeModel::Effective(0.01));
  EXPECT_TRUE(preset("fig4_direct").doppler.has_value());

  EXPECT_EQ(preset("fig5a").fields_template.delta_c, 0.0);
  EXPECT_EQ(preset("fig5b").fields_template.delta_c, 13.0);
  EXPECT_EQ(preset("fig5b_decay").fields_template.delta_c, 13.0);
  EXPECT_EQ(preset("fig5b").exchange, ExchangeModel::None());
  EXPECT_EQ(preset("fig5b_decay").exchange, ExchangeModel::Direct(0.01));
}

TEST(UniformGrid, Endpoints) {
  const auto g = uniform_grid(-5.0, 5.0, 601);
  ASSERT_EQ(g.size(), 601u);
  EXPECT_EQ(g.front(), -5.0);
  EXPECT_EQ(g.back(), 5.0);
  EXPECT_EQ(g[300], 0.0);
  EXPECT_EQ(uniform_grid(1.0, 2.0, 1), std::vector<double>{1.0});
  EXPECT_THROW(uniform_grid(1.0, 1.0, 3), ConfigError);
  EXPECT_THROW(uniform_grid(0.0, 1.0, 0), ConfigError);
}

TEST(ScenarioTest, GridValidation) {
  Scenario s = preset("fig2");
  s.delta_grid = {0.0, 0.0};
  EXPECT_THROW(s.validate(), ConfigError);
  s.delta_grid = {1.0, 0.0};
  EXPECT_THROW(s.validate(), ConfigError);
  s.delta_grid = {};
  EXPECT_THROW(s.validate(), ConfigError);
}

TEST(RunScenario, GridAndFiniteness) {
  for (const auto& name : preset_names()) {
    const Scenario s = coarse(name, 41, 101);
    const Spectrum sp = run_scenario(s);
    ASSERT_EQ(sp.size(), s.delta_grid.size());
    for (std::size_t i = 0; i < sp.size(); ++i) {
      EXPECT_EQ(sp.points[i].delta, s.delta_grid[i]);
      EXPECT_TRUE(std::isfinite(sp.points[i].re_chi));
      EXPECT_TRUE(std::isfinite(sp.points[i].im_chi));
    }
  }
}

TEST(RunScenario, PassiveMedium) {
  for (const auto& name : preset_names()) {
    const Spectrum sp = run_scenario(coarse(name, 121));
    for (const auto& p : sp.points) {
      EXPECT_GE(p.im_chi, 0.0) << name << " delta = " << p.delta;
    }
  }
}

TEST(RunScenario, WorkerCountDoesNotChangeBits) {
  for (const char* name : {"fig2", "fig4_effective", "fig5b_decay"}) {
    const Scenario s = coarse(name, 97, 61);
    const Spectrum one = run_scenario(s, {.workers = 1});
    for (unsigned w : {2u, 3u, 8u}) {
      EXPECT_TRUE(run_scenario(s, {.workers = w}) == one) << name << " workers " << w;
    }
  }
}

TEST(RunScenario, MatchesPointwiseEvaluation) {
  const Scenario s = coarse("fig4_direct", 7, 41);
  const Spectrum sp = run_scenario(s, {.workers = 3});
  for (const auto& p : sp.points) {
    const Complex chi = scenario_chi(s, p.delta);
    EXPECT_EQ(p.re_chi, chi.real());
    EXPECT_EQ(p.im_chi, chi.imag());
  }
}

TEST(RunScenario, CouplingDetuningContinuity) {
  for (const auto& name : preset_names()) {
    const Scenario base = coarse(name, 41, 201);
    const Spectrum ref = run_scenario(base);
    double prev = std::numeric_limits<double>::infinity();
    for (double eps : {1e-3, 1e-4}) {
      Scenario s = base;
      s.fields_template.delta_c += eps;
      const Spectrum sp = run_scenario(s);
      double worst = 0.0;
      for (std::size_t i = 0; i < sp.size(); ++i) {
        worst = std::max(worst, std::abs(sp.points[i].im_chi - ref.points[i].im_chi));
      }
      EXPECT_LT(worst, prev) << name << " eps " << eps;
      EXPECT_LT(worst, 1e-2) << name << " eps " << eps;
      prev = worst;
    }
  }
}

TEST(RunScenario, SolverErrorNamesDelta) {
  Scenario s = preset("fig2");
  s.fields_template = FieldParams{};
  s.fields_template.omega_p3 = 1e-3;
  s.atom.gamma41 = s.atom.gamma42 = 0.0;  // |4> becomes a dark trap
  s.delta_grid = {-0.75, 0.5};
  for (unsigned w : {1u, 2u}) {
    try {
      run_scenario(s, {.workers = w});
      FAIL() << "expected DegenerateSteadyState";
    } catch (const DegenerateSteadyState& e) {
      EXPECT_NE(std::string(e.what()).find("delta = -0.75"), std::string::npos)
          << e.what();
    }
  }
}

TEST(RunScenario, DopplerErrorNamesShiftAndDelta) {
  Scenario s = coarse("fig3", 3, 3);
  s.fields_template = FieldParams{};
  s.fields_template.omega_p3 = 1e-3;
  s.atom.gamma41 = s.atom.gamma42 = 0.0;
  try {
    run_scenario(s);
    FAIL() << "expected DegenerateSteadyState";
  } catch (const DegenerateSteadyState& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("shift"), std::string::npos) << what;
    EXPECT_NE(what.find("delta"), std::string::npos) << what;
  }
}

TEST(RunScenario, Cancellation) {
  std::atomic<bool> cancel{true};
  EXPECT_THROW(run_scenario(preset("fig2"), {.workers = 2, .cancel = &cancel}),
               Cancelled);
}

TEST(RunScenario, ZeroShiftDopplerEqualsUnbroadened) {
  Scenario doppler = coarse("fig2", 31);
  doppler.doppler = DopplerConfig{};
  doppler.doppler->temperature = 1e-30;
  doppler.doppler->n_samples = 3;
  const Spectrum a = run_scenario(coarse("fig2", 31));
  const Spectrum b = run_scenario(doppler);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a.points[i].im_chi, b.points[i].im_chi,
                1e-12 * std::abs(a.points[i].im_chi));
  }
}

TEST(Fig2, TwoSideMaxima) {
  const Spectrum sp = run_scenario(preset("fig2"));
  const auto maxima = local_maxima(sp, 3.0);
  ASSERT_EQ(maxima.size(), 2u);
  EXPECT_LT(sp.points[maxima[0]].delta, 0.0);
  EXPECT_GT(sp.points[maxima[1]].delta, 0.0);
  const EitMetrics m = eit_metrics(sp);
  EXPECT_TRUE(m.is_transparent);
  EXPECT_LT(m.dip_depth, 0.2);
  EXPECT_GT(m.peak_asymmetry, 1.01);
}

}  // namespace
}  // namespace eitsim
