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

#include "eitsim/steady_state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "eitsim/errors.hpp"

namespace eitsim {

namespace {

constexpr int kTraceRow = vec_index(0, 0);

// The 1-norm reciprocal condition estimate tracks sigma_min/sigma_max of the
// constrained system within a small factor on these 16x16 systems. Weak-probe
// presets sit near 1e-8, so only estimates below 1e-10 are sent to the SVD.
// The estimate is meaningless once a pivot is exactly zero, so a tiny pivot
// ratio also triggers the SVD.
constexpr double kRcondGate = 1e-10;
constexpr double kPivotGate = 1e-10;

bool needs_svd(const Eigen::PartialPivLU<Matrix16>& lu) {
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  return !(pivots.minCoeff() > kPivotGate * pivots.maxCoeff()) ||
         !(lu.rcond() > kRcondGate);
}

constexpr double kDriftTol = 1e-6;

Complex trace_of(const Vector16& v) {
  Complex tr = 0.0;
  for (int d = 0; d < 4; ++d) tr += v(vec_index(d, d));
  return tr;
}

double hermiticity_error(const Vector16& v) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      worst = std::max(worst, std::abs(v(vec_index(i, j)) -
                                       std::conj(v(vec_index(j, i)))));
    }
  }
  return worst;
}

}  // namespace

DensityMatrix steady_state(const Liouvillian& l,
                           const SteadyStateOptions& options) {
  Matrix16 a = l.matrix();
  a.row(kTraceRow).setZero();
  for (int d = 0; d < 4; ++d) a(kTraceRow, vec_index(d, d)) = 1.0;

  Vector16 b = Vector16::Zero();
  b(kTraceRow) = 1.0;

  Eigen::PartialPivLU<Matrix16> lu(a);
  if (needs_svd(lu)) {
    Eigen::JacobiSVD<Matrix16> svd(a);
    const auto& s = svd.singularValues();
    if (!(s(s.size() - 1) > options.degeneracy_tol * s(0))) {
      std::ostringstream msg;
      msg << "steady state is not unique: sigma_min/sigma_max = "
          << s(s.size() - 1) / s(0)
          << " (add ground-state decay or drive fields)";
      throw DegenerateSteadyState(msg.str());
    }
  }

  const Vector16 x = lu.solve(b);
  const double residual = (l.matrix() * x).norm();
  if (!x.allFinite() || !(residual <= options.residual_tol)) {
    std::ostringstream msg;
    msg << "steady-state residual " << residual << " exceeds "
        << options.residual_tol;
    throw SolverFailure(msg.str());
  }
  return DensityMatrix(unvectorize(x));
}

DensityMatrix propagate(const DensityMatrix& rho0, const Liouvillian& l,
                        double t_final, double dt) {
  if (!(dt > 0.0) || !(t_final > 0.0)) {
    throw std::invalid_argument("propagate: dt and t_final must be > 0");
  }
  const Matrix16& m = l.matrix();
  Vector16 y = vectorize(rho0.matrix());
  const Complex trace0 = trace_of(y);
  const double herm0 = hermiticity_error(y);

  auto check = [&](double t) {
    if (!y.allFinite() || std::abs(trace_of(y) - trace0) > kDriftTol ||
        hermiticity_error(y) - herm0 > kDriftTol) {
      std::ostringstream msg;
      msg << "RK4 drift above " << kDriftTol << " at t = " << t
          << " with dt = " << dt;
      throw StepTooLarge(msg.str());
    }
  };

  // One classical RK4 step on a linear system is y <- R(hL) y with
  // R(z) = 1 + z + z^2/2 + z^3/6 + z^4/24; build R once per step size.
  auto step_matrix = [&](double h) {
    const Matrix16 z = h * m;
    const Matrix16 id = Matrix16::Identity();
    return Matrix16(id + z * (id + z * (id + z * (id + z / 4.0) / 3.0) / 2.0));
  };

  const auto n_steps = static_cast<long long>(std::ceil(t_final / dt - 1e-9));
  const double last = t_final - static_cast<double>(n_steps - 1) * dt;
  const Matrix16 full = step_matrix(dt);
  Vector16 next;
  double t = 0.0;
  for (long long step = 0; step + 1 < n_steps; ++step) {
    next.noalias() = full * y;
    y = next;
    t += dt;
    if ((step & 1023) == 1023) check(t);
  }
  next.noalias() = (last == dt ? full : step_matrix(last)) * y;
  y = next;
  t = t_final;
  check(t);
  return DensityMatrix(unvectorize(y));
}

Complex susceptibility(const DensityMatrix& rho_ss, const FieldParams& fields) {
  if (fields.omega_p3 == 0.0 && fields.omega_p4 == 0.0) {
    throw ZeroProbe("susceptibility: both probe Rabi frequencies are zero");
  }
  Complex chi = 0.0;
  if (fields.omega_p3 != 0.0) chi += rho_ss(kExcited3, kGround1) / fields.omega_p3;
  if (fields.omega_p4 != 0.0) chi += rho_ss(kExcited4, kGround1) / fields.omega_p4;
  return chi;
}

Complex solve_susceptibility(const AtomParams& atom, const FieldParams& fields,
                             const ExchangeModel& exchange) {
  return susceptibility(steady_state(build_liouvillian(atom, fields, exchange)),
                        fields);
}

}  // namespace eitsim
