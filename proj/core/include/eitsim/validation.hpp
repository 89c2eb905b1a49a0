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

// Oracle cross-checks behind `eitsim validate`, plus the reduced parameter
// sets they use.

#include <string>
#include <vector>

#include "eitsim/liouvillian.hpp"
#include "eitsim/model.hpp"
#include "eitsim/oracle.hpp"

namespace eitsim {

/// Parameters of the full model that reduce it to a simpler system.
struct Reduction {
  AtomParams atom;
  FieldParams fields;  // delta_p is set per point
  ExchangeModel exchange;
};

/// Level |4> carries no field (it still decays, so the steady state stays
/// unique); the ground coherence decays through gamma2_deph only, which
/// leaves the populations in |1>. Maps onto oracle::ThreeLevelParams with
/// gamma31 = Gamma3 + gamma3_deph and gamma21 = gamma2_deph.
Reduction three_level_reduction(double omega_c, double delta_c,
                                double gamma2_deph, double omega_p = 1e-3);
oracle::ThreeLevelParams three_level_oracle_params(const Reduction& r);

/// Two-level limit: |3> decays only to |1>; a 1e-3 coupling with strong
/// ground dephasing keeps |2> empty and the steady state unique while
/// moving chi by less than 1e-6 relative.
Reduction two_level_reduction(double omega_p = 1e-4);

/// Smallest |Re lambda| over the non-zero eigenvalues of L.
double spectral_gap(const Liouvillian& l);
/// Largest |lambda| over the eigenvalues of L.
double spectral_radius(const Liouvillian& l);

/// RK4 from |1><1| for 25 / spectral_gap with dt = 1 / spectral_radius.
DensityMatrix relax_by_propagation(const Liouvillian& l);

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

std::vector<CheckResult> run_validation();

}  // namespace eitsim
