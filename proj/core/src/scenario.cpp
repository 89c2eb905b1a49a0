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

#include "eitsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "eitsim/errors.hpp"
#include "eitsim/liouvillian.hpp"
#include "eitsim/steady_state.hpp"
#include "rethrow.hpp"

namespace eitsim {

namespace {

// Field-independent pieces shared by every scan point of a scenario.
class Evaluator {
 public:
  explicit Evaluator(const Scenario& s)
      : scenario_(s),
        dissipator_(dissipator_superoperator(s.atom, s.exchange)) {
    if (s.doppler) grid_ = velocity_grid(*s.doppler);
  }

  Complex chi(double delta) const {
    const double delta_c = scenario_.fields_template.delta_c;
    if (!scenario_.doppler) return solve(delta_c + delta, delta_c);
    return doppler_average(
        [&](double shift) {
          return solve(delta_c + delta + shift, delta_c + shift);
        },
        grid_);
  }

 private:
  Complex solve(double delta_p, double delta_c) const {
    FieldParams f = scenario_.fields_template;
    f.delta_p = delta_p;
    f.delta_c = delta_c;
    Liouvillian l = dissipator_;
    add_hamiltonian(l, build_hamiltonian(scenario_.atom, f));
    return susceptibility(steady_state(l), f);
  }

  const Scenario& scenario_;
  Liouvillian dissipator_;
  std::vector<VelocityClass> grid_;
};

std::string delta_context(double delta) {
  std::ostringstream ctx;
  ctx.precision(17);
  ctx << "[delta = " << delta << "]";
  return ctx.str();
}

Scenario base_scenario(std::string name) {
  Scenario s;
  s.name = std::move(name);
  s.fields_template =
      FieldParams::from_amplitudes(0.001, 1.0, s.atom.dipole_signs, 0.0, 0.0);
  s.delta_grid = uniform_grid(kDefaultGridMin, kDefaultGridMax,
                              kDefaultGridCount);
  return s;
}

struct PresetInfo {
  const char* name;
  const char* description;
};

constexpr PresetInfo kPresets[] = {
    {"fig2", "no Doppler, no ground-state decay, coupling resonant with |2>-|3>"},
    {"fig3", "fig2 with Doppler averaging at T = 320 K"},
    {"fig4_direct", "fig3 with direct atom exchange, r = 0.01"},
    {"fig4_effective", "fig3 with effective ground-state decay, gamma = 0.01"},
    {"fig5a", "no Doppler, coupling resonant with |2>-|3>, no decay"},
    {"fig5a_decay", "fig5a with direct atom exchange, r = 0.01"},
    {"fig5b", "no Doppler, coupling centred between |3> and |4>, no decay"},
    {"fig5b_decay", "fig5b with direct atom exchange, r = 0.01"},
};

}  // namespace

void Scenario::validate() const {
  atom.validate();
  fields_template.validate();
  exchange.validate();
  if (doppler) doppler->validate();
  if (delta_grid.empty()) {
    throw ConfigError("grid", "delta grid is empty");
  }
  for (std::size_t i = 0; i < delta_grid.size(); ++i) {
    if (!std::isfinite(delta_grid[i])) {
      throw ConfigError("grid", "delta grid contains a non-finite value");
    }
    if (i > 0 && !(delta_grid[i] > delta_grid[i - 1])) {
      throw ConfigError("grid", "delta grid must be strictly increasing");
    }
  }
}

std::vector<double> uniform_grid(double min, double max, int count) {
  if (count < 1) throw ConfigError("grid.count", "must be >= 1");
  if (count == 1) return {min};
  if (!(max > min)) throw ConfigError("grid.max", "must exceed grid.min");
  std::vector<double> g(count);
  const double span = max - min;
  for (int i = 0; i < count; ++i) {
    g[i] = min + span * i / (count - 1);
  }
  g.back() = max;
  return g;
}

Complex scenario_chi(const Scenario& s, double delta) {
  s.validate();
  return Evaluator(s).chi(delta);
}

Spectrum run_scenario(const Scenario& s, const SweepOptions& options) {
  s.validate();
  const Evaluator eval(s);
  const std::size_t n = s.delta_grid.size();

  std::vector<Complex> chi(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  // Indices are handed out in increasing order, so every index below the
  // first failure still runs and the reported error does not depend on the
  // worker count.
  std::atomic<std::size_t> first_failure{n};

  auto work = [&] {
    for (;;) {
      if (options.cancel && options.cancel->load(std::memory_order_relaxed)) {
        return;
      }
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n || i > first_failure.load(std::memory_order_relaxed)) return;
      try {
        chi[i] = eval.chi(s.delta_grid[i]);
      } catch (...) {
        errors[i] = std::current_exception();
        std::size_t seen = first_failure.load(std::memory_order_relaxed);
        while (i < seen && !first_failure.compare_exchange_weak(
                               seen, i, std::memory_order_relaxed)) {
        }
      }
    }
  };

  unsigned workers = options.workers == 0
                         ? std::max(1u, std::thread::hardware_concurrency())
                         : options.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) {
      detail::rethrow_with_context(errors[i], delta_context(s.delta_grid[i]));
    }
  }
  if (options.cancel && options.cancel->load()) {
    throw Cancelled("sweep of '" + s.name + "' cancelled");
  }

  Spectrum out;
  out.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.points.push_back({s.delta_grid[i], chi[i].real(), chi[i].imag()});
  }
  return out;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& p : kPresets) v.emplace_back(p.name);
    return v;
  }();
  return names;
}

std::string preset_description(std::string_view name) {
  for (const auto& p : kPresets) {
    if (name == p.name) return p.description;
  }
  throw UnknownPreset(std::string(name));
}

Scenario preset(std::string_view name) {
  Scenario s = base_scenario(std::string(name));
  if (name == "fig2" || name == "fig5a") return s;
  if (name == "fig3") {
    s.doppler = DopplerConfig{};
    return s;
  }
  if (name == "fig4_direct" || name == "fig4_effective") {
    s.doppler = DopplerConfig{};
    s.exchange = name == "fig4_direct"
                     ? ExchangeModel::Direct(kExchangeRate)
                     : ExchangeModel::Effective(kExchangeRate);
    return s;
  }
  if (name == "fig5a_decay") {
    s.exchange = ExchangeModel::Direct(kExchangeRate);
    return s;
  }
  if (name == "fig5b" || name == "fig5b_decay") {
    // Midpoint of the coupling resonances with |3> (delta_c = 0) and |4>
    // (delta_c = omega43).
    s.fields_template.delta_c = 0.5 * s.atom.omega43;
    if (name == "fig5b_decay") s.exchange = ExchangeModel::Direct(kExchangeRate);
    return s;
  }
  throw UnknownPreset(std::string(name));
}

}  // namespace eitsim
