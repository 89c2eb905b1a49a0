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

#include <Eigen/Core>

#include "eitsim/model.hpp"

namespace eitsim {

using Vector16 = Eigen::Matrix<Complex, 16, 1>;
using Matrix16 = Eigen::Matrix<Complex, 16, 16>;

/// Column-stacked index of rho(row, col).
constexpr int vec_index(int row, int col) noexcept { return row + 4 * col; }

Vector16 vectorize(const Matrix4& rho);
Matrix4 unvectorize(const Vector16& v);

/// Superoperator L with d vec(rho)/dt = L vec(rho), column stacking.
class Liouvillian {
 public:
  Liouvillian() : matrix_(Matrix16::Zero()) {}
  explicit Liouvillian(const Matrix16& m) : matrix_(m) {}

  const Matrix16& matrix() const noexcept { return matrix_; }
  Matrix16& matrix() noexcept { return matrix_; }

  Matrix4 apply(const Matrix4& rho) const {
    return unvectorize(matrix_ * vectorize(rho));
  }

  Liouvillian& operator+=(const Liouvillian& other) {
    matrix_ += other.matrix_;
    return *this;
  }

 private:
  Matrix16 matrix_;
};

/// -i (I (x) H - H^T (x) I).
Liouvillian hamiltonian_superoperator(const Matrix4& h);

/// Everything that does not depend on the fields: radiative decay,
/// dephasing and the selected exchange model. Scans reuse it across
/// detunings.
Liouvillian dissipator_superoperator(const AtomParams& atom,
                                     const ExchangeModel& exchange);

Liouvillian build_liouvillian(const AtomParams& atom, const FieldParams& fields,
                              const ExchangeModel& exchange);

/// Adds -i[H, .] to an existing dissipator in place. Only the entries
/// touched by the commutator are written.
void add_hamiltonian(Liouvillian& l, const Matrix4& h);

/// Number of singular values above rel_tol * sigma_max.
int numerical_rank(const Liouvillian& l, double rel_tol = 1e-12);

}  // namespace eitsim
