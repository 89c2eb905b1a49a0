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

#include "eitsim/liouvillian.hpp"
#include "eitsim/model.hpp"

namespace eitsim {

struct SteadyStateOptions {
  /// Smallest/largest singular value ratio of the constrained system below
  /// which the steady state is reported as degenerate.
  double degeneracy_tol = 1e-12;
  /// Bound on ||L vec(rho_ss)||_2.
  double residual_tol = 1e-10;
};

/// Unique trace-1 null vector of L. The d(rho11)/dt row is replaced by the
/// trace equation and the resulting square system is solved by LU.
///
/// Throws DegenerateSteadyState when the constrained system is numerically
/// singular and SolverFailure when the solution misses the residual bound.
DensityMatrix steady_state(const Liouvillian& l,
                           const SteadyStateOptions& options = {});

/// Fixed-step classical RK4 on d vec(rho)/dt = L vec(rho). The last step is
/// shortened so the integration ends exactly at t_final.
///
/// Throws StepTooLarge when trace or Hermiticity drift exceeds 1e-6 (or the
/// state stops being finite), std::invalid_argument for non-positive times.
DensityMatrix propagate(const DensityMatrix& rho0, const Liouvillian& l,
                        double t_final, double dt);

/// Linear susceptibility up to a constant factor:
/// rho31 / Omega_p3 + rho41 / Omega_p4. A term whose probe Rabi frequency is
/// exactly zero contributes nothing; both zero throws ZeroProbe.
Complex susceptibility(const DensityMatrix& rho_ss, const FieldParams& fields);

/// Convenience: steady state of build_liouvillian(...) followed by
/// susceptibility().
Complex solve_susceptibility(const AtomParams& atom, const FieldParams& fields,
                             const ExchangeModel& exchange);

}  // namespace eitsim
