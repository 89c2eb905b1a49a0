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

#include "eitsim/model.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "eitsim/errors.hpp"

namespace eitsim {

namespace {

void require_rate(const char* key, double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ConfigError(key, "must be a finite rate >= 0, got " +
                               std::to_string(value));
  }
}

void require_finite(const char* key, double value) {
  if (!std::isfinite(value)) {
    throw ConfigError(key, "must be finite");
  }
}

void require_sign(const char* key, int sign) {
  if (sign != 1 && sign != -1) {
    throw ConfigError(key, "dipole sign must be +1 or -1, got " +
                               std::to_string(sign));
  }
}

}  // namespace

void AtomParams::validate() const {
  require_rate("atom.omega43", omega43);
  require_rate("atom.gamma31", gamma31);
  require_rate("atom.gamma32", gamma32);
  require_rate("atom.gamma41", gamma41);
  require_rate("atom.gamma42", gamma42);
  require_rate("atom.gamma3_deph", gamma3_deph);
  require_rate("atom.gamma4_deph", gamma4_deph);
  require_rate("atom.gamma2_deph", gamma2_deph);
  if (!(gamma3_total() > 0.0)) {
    throw ConfigError("atom.gamma31", "gamma31 + gamma32 must be > 0");
  }
  require_sign("atom.dipole_signs.s31", dipole_signs.s31);
  require_sign("atom.dipole_signs.s41", dipole_signs.s41);
  require_sign("atom.dipole_signs.s32", dipole_signs.s32);
  require_sign("atom.dipole_signs.s42", dipole_signs.s42);
}

FieldParams FieldParams::from_amplitudes(double probe, double coupling,
                                         const DipoleSigns& signs,
                                         double delta_p, double delta_c) {
  FieldParams f;
  f.omega_p3 = signs.s31 * probe;
  f.omega_p4 = signs.s41 * probe;
  f.omega_c3 = signs.s32 * coupling;
  f.omega_c4 = signs.s42 * coupling;
  f.delta_p = delta_p;
  f.delta_c = delta_c;
  return f;
}

void FieldParams::validate() const {
  require_finite("fields.omega_p3", omega_p3);
  require_finite("fields.omega_p4", omega_p4);
  require_finite("fields.omega_c3", omega_c3);
  require_finite("fields.omega_c4", omega_c4);
  require_finite("fields.delta_p", delta_p);
  require_finite("fields.delta_c", delta_c);
}

void ExchangeModel::validate() const {
  require_rate("exchange.rate", rate);
}

const char* to_string(ExchangeModel::Kind kind) {
  switch (kind) {
    case ExchangeModel::Kind::kNone:
      return "none";
    case ExchangeModel::Kind::kDirect:
      return "direct";
    case ExchangeModel::Kind::kEffective:
      return "effective";
  }
  return "none";
}

DensityMatrix DensityMatrix::pure(Level level) {
  Matrix4 m = Matrix4::Zero();
  m(level, level) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::diagonal(double p1, double p2, double p3,
                                      double p4) {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = p1;
  m(1, 1) = p2;
  m(2, 2) = p3;
  m(3, 3) = p4;
  return DensityMatrix(m);
}

double DensityMatrix::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  // Eigenvalues of the Hermitian part; the anti-Hermitian part is checked
  // separately.
  const Matrix4 h = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical(double hermitian_tol, double trace_tol,
                                double positivity_tol) const {
  if (!rho_.allFinite()) return false;
  if (hermiticity_error() > hermitian_tol) return false;
  if (std::abs(trace() - Complex(1.0)) > trace_tol) return false;
  return min_eigenvalue() >= -positivity_tol;
}

Matrix4 build_hamiltonian(const AtomParams& atom, const FieldParams& f) {
  Matrix4 m = Matrix4::Zero();
  m(1, 1) = 2.0 * (f.delta_p - f.delta_c);
  m(2, 2) = 2.0 * f.delta_p;
  m(3, 3) = 2.0 * (f.delta_p - atom.omega43);
  m(0, 2) = m(2, 0) = f.omega_p3;
  m(0, 3) = m(3, 0) = f.omega_p4;
  m(1, 2) = m(2, 1) = f.omega_c3;
  m(1, 3) = m(3, 1) = f.omega_c4;
  return -0.5 * m;
}

Matrix4 lindblad_channel(const Matrix4& rho, Level to, Level from,
                         double gamma) {
  Matrix4 out = Matrix4::Zero();
  if (gamma == 0.0) return out;
  const double half = 0.5 * gamma;
  // 2 J rho J^dag with J = |to><from|.
  out(to, to) += gamma * rho(from, from);
  // -(J^dag J rho + rho J^dag J) with J^dag J = |from><from|.
  for (int k = 0; k < 4; ++k) {
    out(from, k) -= half * rho(from, k);
    out(k, from) -= half * rho(k, from);
  }
  return out;
}

Matrix4 lindblad_rhs(const Matrix4& rho, const AtomParams& atom,
                     const FieldParams& fields) {
  const Matrix4 h = build_hamiltonian(atom, fields);
  const Complex minus_i(0.0, -1.0);
  Matrix4 out = minus_i * (h * rho - rho * h);

  out += lindblad_channel(rho, kGround1, kExcited3, atom.gamma31);
  out += lindblad_channel(rho, kGround2, kExcited3, atom.gamma32);
  out += lindblad_channel(rho, kGround1, kExcited4, atom.gamma41);
  out += lindblad_channel(rho, kGround2, kExcited4, atom.gamma42);
  out += lindblad_channel(rho, kExcited3, kExcited3, atom.gamma3_deph);
  out += lindblad_channel(rho, kExcited4, kExcited4, atom.gamma4_deph);
  out += lindblad_channel(rho, kGround2, kGround2, atom.gamma2_deph);
  return out;
}

Matrix4 exchange_rhs_direct(const Matrix4& rho, double r) {
  Matrix4 out = -r * rho;
  const Complex source = 0.5 * r * rho.trace();
  out(0, 0) += source;
  out(1, 1) += source;
  return out;
}

Matrix4 exchange_rhs_effective(const Matrix4& rho, double gamma) {
  return lindblad_channel(rho, kGround1, kGround2, gamma) +
         lindblad_channel(rho, kGround2, kGround1, gamma);
}

Matrix4 exchange_rhs(const Matrix4& rho, const ExchangeModel& exchange) {
  switch (exchange.kind) {
    case ExchangeModel::Kind::kDirect:
      return exchange_rhs_direct(rho, exchange.rate);
    case ExchangeModel::Kind::kEffective:
      return exchange_rhs_effective(rho, exchange.rate);
    case ExchangeModel::Kind::kNone:
      break;
  }
  return Matrix4::Zero();
}

Matrix4 total_rhs(const Matrix4& rho, const AtomParams& atom,
                  const FieldParams& fields, const ExchangeModel& exchange) {
  return lindblad_rhs(rho, atom, fields) + exchange_rhs(rho, exchange);
}

}  // namespace eitsim
