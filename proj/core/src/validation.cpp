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

#include "eitsim/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

#include "eitsim/scenario.hpp"
#include "eitsim/steady_state.hpp"

namespace eitsim {

namespace {

Eigen::Matrix<Complex, 16, 1> eigenvalues(const Liouvillian& l) {
  Eigen::ComplexEigenSolver<Matrix16> es(l.matrix(), false);
  return es.eigenvalues();
}

Matrix4 random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Matrix4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = Complex(n(rng), n(rng));
  Matrix4 rho = a * a.adjoint();
  return rho / rho.trace();
}

double relative_error(Complex got, Complex want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

Reduction three_level_reduction(double omega_c, double delta_c,
                                double gamma2_deph, double omega_p) {
  Reduction r;
  r.atom.gamma2_deph = gamma2_deph;
  r.fields.omega_p3 = omega_p;
  r.fields.omega_c3 = omega_c;
  r.fields.delta_c = delta_c;
  return r;
}

oracle::ThreeLevelParams three_level_oracle_params(const Reduction& r) {
  oracle::ThreeLevelParams p;
  p.omega_c = r.fields.omega_c3;
  p.delta_c = r.fields.delta_c;
  p.gamma31 = r.atom.gamma3_total() + r.atom.gamma3_deph;
  p.gamma21 = r.atom.gamma2_deph;
  return p;
}

Reduction two_level_reduction(double omega_p) {
  Reduction r;
  r.atom.gamma31 = 1.0;
  r.atom.gamma32 = 0.0;
  r.atom.gamma2_deph = 2.0;
  r.fields.omega_p3 = omega_p;
  r.fields.omega_c3 = 1e-3;
  return r;
}

double spectral_gap(const Liouvillian& l) {
  const auto ev = eigenvalues(l);
  // Drop the eigenvalue nearest zero (the steady state).
  int null_index = 0;
  for (int i = 1; i < ev.size(); ++i) {
    if (std::abs(ev(i)) < std::abs(ev(null_index))) null_index = i;
  }
  double gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < ev.size(); ++i) {
    if (i != null_index) gap = std::min(gap, std::abs(ev(i).real()));
  }
  return gap;
}

double spectral_radius(const Liouvillian& l) {
  return eigenvalues(l).cwiseAbs().maxCoeff();
}

DensityMatrix relax_by_propagation(const Liouvillian& l) {
  const double t_final = 25.0 / spectral_gap(l);
  const double dt = 1.0 / spectral_radius(l);
  return propagate(DensityMatrix::pure(kGround1), l, t_final, dt);
}

std::vector<CheckResult> run_validation() {
  std::vector<CheckResult> out;

  {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      AtomParams atom;
      atom.omega43 = 40.0 * u(rng);
      atom.gamma31 = u(rng) + 0.01;
      atom.gamma32 = u(rng);
      atom.gamma41 = u(rng);
      atom.gamma42 = u(rng);
      atom.gamma3_deph = u(rng);
      atom.gamma4_deph = u(rng);
      atom.gamma2_deph = u(rng);
      const auto fields = FieldParams::from_amplitudes(
          u(rng), 2.0 * u(rng), atom.dipole_signs, 10.0 * (u(rng) - 0.5),
          10.0 * (u(rng) - 0.5));
      const ExchangeModel ex = trial % 3 == 0   ? ExchangeModel::None()
                               : trial % 3 == 1 ? ExchangeModel::Direct(u(rng))
                                                : ExchangeModel::Effective(u(rng));
      const Matrix4 rho = random_state(rng);
      const Matrix4 direct = total_rhs(rho, atom, fields, ex);
      const Matrix4 via_l = build_liouvillian(atom, fields, ex).apply(rho);
      worst = std::max(worst, (direct - via_l).cwiseAbs().maxCoeff());
    }
    out.push_back({"liouvillian matches direct generator", worst <= 1e-12,
                   worst, 1e-12});
  }

  {
    const Reduction r = two_level_reduction();
    double worst = 0.0;
    for (double delta : uniform_grid(-5.0, 5.0, 101)) {
      FieldParams f = r.fields;
      f.delta_p = f.delta_c + delta;
      const Complex chi = solve_susceptibility(r.atom, f, r.exchange);
      worst = std::max(worst,
                       relative_error(chi, oracle::chi_two_level(
                                               f.delta_p, r.atom.gamma31)));
    }
    out.push_back({"two-level Lorentzian", worst <= 1e-4, worst, 1e-4});
  }

  {
    const Reduction r = three_level_reduction(1.0, 0.0, 0.01);
    const auto p = three_level_oracle_params(r);
    double worst = 0.0;
    for (double delta : uniform_grid(-5.0, 5.0, 101)) {
      FieldParams f = r.fields;
      f.delta_p = f.delta_c + delta;
      const Complex chi = solve_susceptibility(r.atom, f, r.exchange);
      worst = std::max(worst,
                       relative_error(chi, oracle::chi_three_level(p, f.delta_p)));
    }
    out.push_back({"three-level EIT formula", worst <= 1e-3, worst, 1e-3});
  }

  for (const char* name : {"fig2", "fig4_direct", "fig5b_decay"}) {
    const Scenario s = preset(name);
    double worst = 0.0;
    for (double delta : {-1.0, 0.0, 0.5}) {
      FieldParams f = s.fields_template;
      f.delta_p = f.delta_c + delta;
      const Liouvillian l = build_liouvillian(s.atom, f, s.exchange);
      const Matrix4 diff =
          steady_state(l).matrix() - relax_by_propagation(l).matrix();
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
    out.push_back({std::string("steady state vs RK4 (") + name + ")",
                   worst <= 1e-6, worst, 1e-6});
  }
  return out;
}

}  // namespace eitsim
