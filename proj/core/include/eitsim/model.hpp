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

// Four-level double-Lambda atom: ground states |1>, |2>; excited states |3>,
// |4> separated by omega43. All frequencies and rates are in units of the
// total decay rate of |3> (Gamma3 = Gamma31 + Gamma32), hbar = 1.

#include <complex>

#include <Eigen/Core>

namespace eitsim {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;

/// Level indices (0-based) in the basis (|1>, |2>, |3>, |4>).
enum Level : int { kGround1 = 0, kGround2 = 1, kExcited3 = 2, kExcited4 = 3 };

/// Relative signs of the four transition dipoles. Default is
/// mu31 = mu41 = mu32 = -mu42.
struct DipoleSigns {
  int s31 = +1;
  int s41 = +1;
  int s32 = +1;
  int s42 = -1;
};

struct AtomParams {
  double omega43 = 26.0;
  double gamma31 = 0.5;
  double gamma32 = 0.5;
  double gamma41 = 0.5;
  double gamma42 = 0.5;
  double gamma3_deph = 0.0;
  double gamma4_deph = 0.0;
  double gamma2_deph = 0.0;
  DipoleSigns dipole_signs{};

  double gamma3_total() const noexcept { return gamma31 + gamma32; }

  /// Throws ConfigError naming the offending field ("atom.<field>").
  void validate() const;
};

/// Real Rabi frequencies and detunings. delta_p = w_p - w31,
/// delta_c = w_c - w32.
struct FieldParams {
  double omega_p3 = 0.0;
  double omega_p4 = 0.0;
  double omega_c3 = 0.0;
  double omega_c4 = 0.0;
  double delta_p = 0.0;
  double delta_c = 0.0;

  /// Distributes single probe / coupling amplitudes over the two transitions
  /// each field drives, using the dipole sign pattern.
  static FieldParams from_amplitudes(double probe, double coupling,
                                     const DipoleSigns& signs, double delta_p,
                                     double delta_c);

  void validate() const;
};

struct ExchangeModel {
  enum class Kind { kNone, kDirect, kEffective };

  Kind kind = Kind::kNone;
  double rate = 0.0;

  static ExchangeModel None() { return {}; }
  static ExchangeModel Direct(double r) { return {Kind::kDirect, r}; }
  static ExchangeModel Effective(double gamma) {
    return {Kind::kEffective, gamma};
  }

  void validate() const;
  bool operator==(const ExchangeModel&) const = default;
};

const char* to_string(ExchangeModel::Kind kind);

/// 4x4 density matrix in the (|1>, |2>, |3>, |4>) basis.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kPositivityTol = 1e-10;

  DensityMatrix() : rho_(Matrix4::Zero()) {}
  explicit DensityMatrix(const Matrix4& rho) : rho_(rho) {}

  /// Pure state |level><level|.
  static DensityMatrix pure(Level level);
  static DensityMatrix diagonal(double p1, double p2, double p3, double p4);

  const Matrix4& matrix() const noexcept { return rho_; }
  Matrix4& matrix() noexcept { return rho_; }
  Complex operator()(int row, int col) const { return rho_(row, col); }

  Complex trace() const { return rho_.trace(); }
  double hermiticity_error() const;
  double min_eigenvalue() const;

  /// True when every invariant holds within the given tolerances.
  bool is_physical(double hermitian_tol = kHermitianTol,
                   double trace_tol = kTraceTol,
                   double positivity_tol = kPositivityTol) const;

 private:
  Matrix4 rho_;
};

/// Interaction Hamiltonian in the rotating frame: -(1/2) times the field
/// matrix with diagonal (0, 2(dp - dc), 2 dp, 2(dp - omega43)).
Matrix4 build_hamiltonian(const AtomParams& atom, const FieldParams& fields);

/// d(rho)/dt without atom exchange: -i[H, rho], the four radiative channels
/// (3->1, 3->2, 4->1, 4->2) and the three pure-dephasing channels on |3>,
/// |4>, |2>.
Matrix4 lindblad_rhs(const Matrix4& rho, const AtomParams& atom,
                     const FieldParams& fields);

/// Atoms leaving and re-entering the beam: -r rho + (r/2)(s11 + s22) tr(rho).
/// The trace factor makes the term linear; on trace-1 states it equals the
/// bare (r/2)(s11 + s22) source.
Matrix4 exchange_rhs_direct(const Matrix4& rho, double r);

/// Ground-state exchange as two Lindblad channels at rate gamma with jump
/// operators s12 = |1><2| and s21 = |2><1|.
Matrix4 exchange_rhs_effective(const Matrix4& rho, double gamma);

Matrix4 exchange_rhs(const Matrix4& rho, const ExchangeModel& exchange);

/// Full generator: lindblad_rhs + exchange_rhs.
Matrix4 total_rhs(const Matrix4& rho, const AtomParams& atom,
                  const FieldParams& fields, const ExchangeModel& exchange);

/// Lindblad dissipator (gamma/2)(2 J rho J^dag - J^dag J rho - rho J^dag J)
/// for the transition operator J = |to><from|.
Matrix4 lindblad_channel(const Matrix4& rho, Level to, Level from,
                         double gamma);

}  // namespace eitsim
