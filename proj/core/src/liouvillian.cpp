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

#include "eitsim/liouvillian.hpp"

#include <Eigen/SVD>

namespace eitsim {

namespace {

// Superoperator of (gamma/2)(2 J rho J^dag - J^dag J rho - rho J^dag J) for
// J = |to><from|.
void add_channel(Matrix16& m, int to, int from, double gamma) {
  if (gamma == 0.0) return;
  const double half = 0.5 * gamma;
  m(vec_index(to, to), vec_index(from, from)) += gamma;
  for (int k = 0; k < 4; ++k) {
    m(vec_index(from, k), vec_index(from, k)) -= half;
    m(vec_index(k, from), vec_index(k, from)) -= half;
  }
}

}  // namespace

Vector16 vectorize(const Matrix4& rho) {
  Vector16 v;
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) v(vec_index(r, c)) = rho(r, c);
  }
  return v;
}

Matrix4 unvectorize(const Vector16& v) {
  Matrix4 rho;
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) rho(r, c) = v(vec_index(r, c));
  }
  return rho;
}

void add_hamiltonian(Liouvillian& l, const Matrix4& h) {
  Matrix16& m = l.matrix();
  const Complex minus_i(0.0, -1.0);
  // vec(H rho)_{(i,j)} = sum_k H_ik rho_kj ; vec(rho H)_{(i,j)} = sum_k rho_ik H_kj
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int row = vec_index(i, j);
      for (int k = 0; k < 4; ++k) {
        if (h(i, k) != Complex(0.0)) m(row, vec_index(k, j)) += minus_i * h(i, k);
        if (h(k, j) != Complex(0.0)) m(row, vec_index(i, k)) -= minus_i * h(k, j);
      }
    }
  }
}

Liouvillian hamiltonian_superoperator(const Matrix4& h) {
  Liouvillian l;
  add_hamiltonian(l, h);
  return l;
}

Liouvillian dissipator_superoperator(const AtomParams& atom,
                                     const ExchangeModel& exchange) {
  Matrix16 m = Matrix16::Zero();
  add_channel(m, kGround1, kExcited3, atom.gamma31);
  add_channel(m, kGround2, kExcited3, atom.gamma32);
  add_channel(m, kGround1, kExcited4, atom.gamma41);
  add_channel(m, kGround2, kExcited4, atom.gamma42);
  add_channel(m, kExcited3, kExcited3, atom.gamma3_deph);
  add_channel(m, kExcited4, kExcited4, atom.gamma4_deph);
  add_channel(m, kGround2, kGround2, atom.gamma2_deph);

  switch (exchange.kind) {
    case ExchangeModel::Kind::kDirect: {
      const double r = exchange.rate;
      m.diagonal().array() -= r;
      // (r/2)(s11 + s22) tr(rho): outer product of vec(s11 + s22) and vec(I).
      for (int d = 0; d < 4; ++d) {
        m(vec_index(0, 0), vec_index(d, d)) += 0.5 * r;
        m(vec_index(1, 1), vec_index(d, d)) += 0.5 * r;
      }
      break;
    }
    case ExchangeModel::Kind::kEffective:
      add_channel(m, kGround1, kGround2, exchange.rate);
      add_channel(m, kGround2, kGround1, exchange.rate);
      break;
    case ExchangeModel::Kind::kNone:
      break;
  }
  return Liouvillian(m);
}

Liouvillian build_liouvillian(const AtomParams& atom, const FieldParams& fields,
                              const ExchangeModel& exchange) {
  Liouvillian l = dissipator_superoperator(atom, exchange);
  add_hamiltonian(l, build_hamiltonian(atom, fields));
  return l;
}

int numerical_rank(const Liouvillian& l, double rel_tol) {
  Eigen::JacobiSVD<Matrix16> svd(l.matrix());
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

}  // namespace eitsim
