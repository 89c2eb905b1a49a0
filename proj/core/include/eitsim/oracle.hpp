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

// Closed-form and reduced-model references, kept independent of the
// superoperator path so they can cross-check it.

#include <Eigen/Core>

#include "eitsim/model.hpp"

namespace eitsim::oracle {

using Matrix3 = Eigen::Matrix<Complex, 3, 3>;

/// Weak-probe two-level susceptibility per unit probe Rabi frequency,
/// (i/2) / (gamma31/2 - i delta_p). gamma31 is the full decay rate of the
/// optical coherence times two (Gamma3 + gamma3_deph for the full model).
Complex chi_two_level(double delta_p, double gamma31);

struct ThreeLevelParams {
  double omega_c = 0.0;
  double delta_p = 0.0;
  double delta_c = 0.0;
  double gamma31 = 1.0;
  /// Twice the decay rate of the ground coherence rho21.
  double gamma21 = 0.0;
};

/// Lambda-EIT weak-probe susceptibility:
/// (i/2) / (gamma31/2 - i dp + (Oc^2/4) / (gamma21/2 - i (dp - dc))).
/// The delta_p argument overrides params.delta_p.
Complex chi_three_level(const ThreeLevelParams& params, double delta_p);

/// Standalone three-level Lambda system (|1>, |2>, |3>) written as explicit
/// optical Bloch rate equations rather than Lindblad sandwiches.
struct LambdaModel {
  double omega_p = 0.0;
  double omega_c = 0.0;
  double delta_p = 0.0;
  double delta_c = 0.0;
  double gamma31 = 0.5;
  double gamma32 = 0.5;
  double gamma3_deph = 0.0;
  double gamma2_deph = 0.0;
};

Matrix3 lambda_rhs(const Matrix3& rho, const LambdaModel& model);

}  // namespace eitsim::oracle
