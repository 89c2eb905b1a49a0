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

#include "eitsim/oracle.hpp"

namespace eitsim::oracle {

namespace {
constexpr Complex kI(0.0, 1.0);
}  // namespace

Complex chi_two_level(double delta_p, double gamma31) {
  return 0.5 * kI / (0.5 * gamma31 - kI * delta_p);
}

Complex chi_three_level(const ThreeLevelParams& p, double delta_p) {
  const Complex ground = 0.5 * p.gamma21 - kI * (delta_p - p.delta_c);
  Complex denom = 0.5 * p.gamma31 - kI * delta_p;
  if (p.omega_c != 0.0) {
    // Undamped two-photon resonance: ideal dark state, no absorption.
    if (ground == Complex(0.0)) return 0.0;
    denom += 0.25 * p.omega_c * p.omega_c / ground;
  }
  return 0.5 * kI / denom;
}

Matrix3 lambda_rhs(const Matrix3& rho, const LambdaModel& m) {
  // Bare energies and couplings of -(1/2)[[0, 0, Op], [0, 2(dp - dc), Oc],
  // [Op, Oc, 2 dp]].
  const double energy[3] = {0.0, -(m.delta_p - m.delta_c), -m.delta_p};
  const double vp = -0.5 * m.omega_p;  // <1|H|3>
  const double vc = -0.5 * m.omega_c;  // <2|H|3>

  // (V rho)_{ab} and (rho V)_{ab}, V holding only the 1-3 and 2-3 couplings.
  auto v_rho = [&](int a, int b) -> Complex {
    switch (a) {
      case 0: return vp * rho(2, b);
      case 1: return vc * rho(2, b);
      default: return vp * rho(0, b) + vc * rho(1, b);
    }
  };
  auto rho_v = [&](int a, int b) -> Complex {
    switch (b) {
      case 0: return rho(a, 2) * vp;
      case 1: return rho(a, 2) * vc;
      default: return rho(a, 0) * vp + rho(a, 1) * vc;
    }
  };

  Matrix3 out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      out(a, b) = -kI * ((energy[a] - energy[b]) * rho(a, b) + v_rho(a, b) -
                         rho_v(a, b));
    }
  }

  // Spontaneous emission out of |3>.
  const double g3 = m.gamma31 + m.gamma32;
  out(2, 2) -= g3 * rho(2, 2);
  out(0, 0) += m.gamma31 * rho(2, 2);
  out(1, 1) += m.gamma32 * rho(2, 2);

  // Coherence damping: half the sum of the loss rates of the two levels.
  const double loss[3] = {0.0, m.gamma2_deph, g3 + m.gamma3_deph};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a != b) out(a, b) -= 0.5 * (loss[a] + loss[b]) * rho(a, b);
    }
  }
  return out;
}

}  // namespace eitsim::oracle
