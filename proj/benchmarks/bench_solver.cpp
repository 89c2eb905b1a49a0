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

#include <benchmark/benchmark.h>

#include "eitsim/liouvillian.hpp"
#include "eitsim/scenario.hpp"
#include "eitsim/steady_state.hpp"

namespace {

void BM_BuildLiouvillian(benchmark::State& state) {
  const auto s = eitsim::preset("fig2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eitsim::build_liouvillian(s.atom, s.fields_template, s.exchange));
  }
}
BENCHMARK(BM_BuildLiouvillian);

void BM_SteadyState(benchmark::State& state) {
  const auto s = eitsim::preset("fig4_direct");
  const auto l = eitsim::build_liouvillian(s.atom, s.fields_template, s.exchange);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eitsim::steady_state(l));
  }
}
BENCHMARK(BM_SteadyState);

void BM_ScenarioPoint(benchmark::State& state) {
  auto s = eitsim::preset("fig3");
  s.delta_grid = {0.0};
  s.doppler->n_samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eitsim::run_scenario(s));
  }
}
BENCHMARK(BM_ScenarioPoint)->Arg(201)->Arg(801)->Unit(benchmark::kMillisecond);

void BM_Fig2Spectrum(benchmark::State& state) {
  const auto s = eitsim::preset("fig2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(eitsim::run_scenario(s));
  }
}
BENCHMARK(BM_Fig2Spectrum)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
